"""Discount-rate synthesis: averaging, hazard normalization and blending."""

from hazard_rate.rates.averaging import WindowAverage, average_window
from hazard_rate.rates.blend import DEFAULT_WEIGHT_A, blend, blend_sweep
from hazard_rate.rates.correlation import Correlation, pearson_permutation_p, pearson_r
from hazard_rate.rates.hazard import normalize_hazard
from hazard_rate.rates.synthesis import build_discount_rates, window_comparison

__all__ = [
    "Correlation",
    "DEFAULT_WEIGHT_A",
    "WindowAverage",
    "average_window",
    "blend",
    "blend_sweep",
    "build_discount_rates",
    "normalize_hazard",
    "pearson_permutation_p",
    "pearson_r",
    "window_comparison",
]

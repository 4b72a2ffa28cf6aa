"""Spread of each country's rates over time."""

import numpy as np

from hazard_rate.models.analysis import RangeHistogram
from hazard_rate.models.rates import EconomicRateSeries

DEFAULT_BIN_WIDTH = 0.01


def range_histogram(
    series: list[EconomicRateSeries],
    bin_width: float = DEFAULT_BIN_WIDTH,
) -> RangeHistogram:
    """
    Per-country max - min of the rate samples, binned.

    Every country with samples gets a range; only countries with at least
    two samples enter the histogram counts.

    Args:
        series: Economic series of all countries
        bin_width: Histogram bin width in rate units

    Returns:
        RangeHistogram with ranges ordered by iso3
    """
    if bin_width <= 0:
        raise ValueError("bin_width must be > 0")

    ranges: dict[str, float] = {}
    counted: list[float] = []
    for s in sorted(series, key=lambda s: s.country.iso3):
        values = s.values
        if not values:
            continue
        spread = max(values) - min(values)
        ranges[s.country.iso3] = spread
        if len(values) >= 2:
            counted.append(spread)

    top = max(counted, default=0.0)
    n_bins = int(np.floor(top / bin_width)) + 1
    edges = np.arange(n_bins + 1) * bin_width
    counts, _ = np.histogram(np.asarray(counted), bins=edges)

    return RangeHistogram(
        ranges=ranges,
        bin_width=bin_width,
        bin_edges=[float(e) for e in edges],
        counts=[int(c) for c in counts],
    )

"""Comparative analytics over rates and LCOH results."""

from hazard_rate.analysis.comparison import clip_annotation, compare_schemes, uniform_gap
from hazard_rate.analysis.ranges import range_histogram
from hazard_rate.analysis.statistics import all_yearly_stats, describe, percentile, yearly_stats

__all__ = [
    "all_yearly_stats",
    "clip_annotation",
    "compare_schemes",
    "describe",
    "percentile",
    "range_histogram",
    "uniform_gap",
    "yearly_stats",
]

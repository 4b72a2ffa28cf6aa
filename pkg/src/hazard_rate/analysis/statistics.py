"""Cross-country distribution statistics of economic rates."""

from __future__ import annotations

import math
from collections.abc import Iterable

import numpy as np

from hazard_rate.errors import AnalysisError, ErrorCode
from hazard_rate.models.analysis import YearStats
from hazard_rate.models.rates import EconomicRateSeries

MIN_COUNTRIES = 4
OUTLIER_WHISKER = 1.5


def percentile(sorted_values: list[float], p: float) -> float:
    """
    Calculate percentile using linear interpolation.

    This is the inclusive ("type 7") convention: position (n - 1) * p / 100.

    Args:
        sorted_values: Pre-sorted list of values
        p: Percentile to calculate (0-100)

    Returns:
        The value at the given percentile
    """
    if not sorted_values:
        return 0.0

    n = len(sorted_values)
    if n == 1:
        return sorted_values[0]

    k = (n - 1) * (p / 100)
    f = math.floor(k)
    c = math.ceil(k)

    if f == c:
        return sorted_values[int(k)]

    return sorted_values[int(f)] * (c - k) + sorted_values[int(c)] * (k - f)


def describe(values: dict[str, float], year: int) -> YearStats:
    """
    Boxplot statistics of a country -> value mapping.

    Args:
        values: iso3 -> rate
        year: Label stored on the result

    Returns:
        YearStats with Tukey outliers ordered by iso3

    Raises:
        AnalysisError: INSUFFICIENT_DATA for fewer than 4 countries
    """
    if len(values) < MIN_COUNTRIES:
        raise AnalysisError(
            ErrorCode.INSUFFICIENT_DATA,
            f"{year}: need at least {MIN_COUNTRIES} countries, got {len(values)}",
            year=year,
        )

    sorted_vals = sorted(values.values())
    data = np.asarray(sorted_vals)
    q1 = percentile(sorted_vals, 25)
    q3 = percentile(sorted_vals, 75)
    iqr = q3 - q1
    low = q1 - OUTLIER_WHISKER * iqr
    high = q3 + OUTLIER_WHISKER * iqr

    return YearStats(
        year=year,
        count=len(sorted_vals),
        mean=float(data.mean()),
        median=percentile(sorted_vals, 50),
        q1=q1,
        q3=q3,
        iqr=iqr,
        std=float(data.std(ddof=1)),
        min_val=sorted_vals[0],
        max_val=sorted_vals[-1],
        outliers=[(iso3, v) for iso3, v in sorted(values.items()) if v < low or v > high],
    )


def yearly_stats(series: Iterable[EconomicRateSeries], year: int) -> YearStats:
    """
    Distribution of the rates all countries had in one year.

    Only dated samples count; single-vintage series carry no year.

    Raises:
        AnalysisError: INSUFFICIENT_DATA
    """
    values = {s.country.iso3: s.samples[year] for s in series if year in s.samples}
    return describe(values, year)


def all_yearly_stats(series: list[EconomicRateSeries]) -> list[YearStats]:
    """YearStats for every year with enough countries, oldest first."""
    years = sorted({year for s in series for year in s.samples})
    stats = []
    for year in years:
        try:
            stats.append(yearly_stats(series, year))
        except AnalysisError:
            continue
    return stats

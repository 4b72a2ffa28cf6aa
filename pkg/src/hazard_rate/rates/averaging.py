"""Multi-year averaging of economic rates."""

from dataclasses import dataclass

from hazard_rate.errors import AnalysisError, ErrorCode, InputError
from hazard_rate.models.rates import EconomicRateSeries


@dataclass(frozen=True)
class WindowAverage:
    """Window mean and how many samples fed it."""

    rate: float
    samples_used: int


def average_window(series: EconomicRateSeries, end_year: int, window: int) -> WindowAverage:
    """
    Arithmetic mean of the samples in [end_year - window + 1, end_year].

    Missing years are skipped rather than treated as failures. A
    single-vintage series returns its one value for any window.

    Args:
        series: Economic rate samples of one country
        end_year: Last year of the window
        window: Window length in years (>= 1)

    Returns:
        WindowAverage

    Raises:
        InputError: CONFIG_ERROR for window < 1
        AnalysisError: NO_DATA_IN_WINDOW when no sample falls inside
    """
    if window < 1:
        raise InputError(ErrorCode.CONFIG_ERROR, f"window must be >= 1, got {window}")

    if series.single_vintage is not None:
        return WindowAverage(rate=series.single_vintage, samples_used=1)

    first = end_year - window + 1
    values = [rate for year, rate in series.samples.items() if first <= year <= end_year]
    if not values:
        raise AnalysisError(
            ErrorCode.NO_DATA_IN_WINDOW,
            f"{series.country.iso3}: no samples in {first}-{end_year}",
            iso3=series.country.iso3,
        )
    return WindowAverage(rate=sum(values) / len(values), samples_used=len(values))

"""Assemble final discount-rate records from resolved sources."""

import structlog

from hazard_rate.analysis.statistics import describe
from hazard_rate.data.resolver import ResolvedRates
from hazard_rate.errors import AnalysisError
from hazard_rate.models.analysis import YearStats
from hazard_rate.models.rates import DiscountRateRecord, EconomicRateSeries
from hazard_rate.rates.averaging import WindowAverage, average_window
from hazard_rate.rates.blend import DEFAULT_WEIGHT_A, blend
from hazard_rate.rates.hazard import normalize_hazard

logger = structlog.get_logger()


def build_discount_rates(
    resolved: ResolvedRates,
    end_year: int,
    window: int = 10,
    a: float = DEFAULT_WEIGHT_A,
    wri_denominator: str = "observed",
) -> list[DiscountRateRecord]:
    """
    Average, normalize and blend every country's rates.

    Args:
        resolved: Cascade output covering all countries
        end_year: Last year of the averaging window
        window: Averaging window in years
        a: Economic share of the blend
        wri_denominator: 'observed' or '100'

    Returns:
        One record per country, ordered by iso3
    """
    averages: dict[str, WindowAverage] = {
        iso3: average_window(series, end_year, window)
        for iso3, series in sorted(resolved.economic.items())
    }
    economic = {iso3: avg.rate for iso3, avg in averages.items()}
    hazard = normalize_hazard(
        {iso3: h.score for iso3, h in resolved.hazard.items()},
        economic,
        denominator=wri_denominator,
    )

    records = []
    for iso3, avg in averages.items():
        series = resolved.economic[iso3]
        records.append(
            DiscountRateRecord(
                country=series.country,
                i_economic=avg.rate,
                i_hazard=hazard[iso3],
                weight_a=a,
                weight_b=1.0 - a,
                i_final=blend(avg.rate, hazard[iso3], a),
                econ_source=series.source,
                hazard_source=resolved.hazard[iso3].source,
                window_years=window,
                samples_used=avg.samples_used,
            )
        )

    logger.info(
        "Built discount rates",
        countries=len(records),
        end_year=end_year,
        window=window,
        a=a,
        max_economic=round(max(economic.values()), 6),
    )
    return records


def window_comparison(
    series: list[EconomicRateSeries],
    end_year: int,
    windows: tuple[int, ...] = (1, 3, 5, 10),
) -> dict[int, YearStats]:
    """
    Cross-country statistics of the averaged rate for several window lengths.

    Only dated series take part; countries without samples in a window
    are left out of that window, and windows with too few countries to
    describe are omitted.

    Args:
        series: Economic series of all countries
        end_year: Last year of every window
        windows: Window lengths in years

    Returns:
        window -> YearStats labelled with end_year
    """
    dated = [s for s in series if s.single_vintage is None]
    comparison: dict[int, YearStats] = {}
    for window in windows:
        averaged = {}
        for s in dated:
            try:
                averaged[s.country.iso3] = average_window(s, end_year, window).rate
            except AnalysisError:
                continue
        try:
            comparison[window] = describe(averaged, end_year)
        except AnalysisError as e:
            logger.warning("Window skipped", window=window, countries=len(averaged), code=e.code.value)
    return comparison

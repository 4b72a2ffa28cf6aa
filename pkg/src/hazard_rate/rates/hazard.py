"""Normalization of natural-hazard scores onto the economic rate scale."""

from hazard_rate.errors import AnalysisError, ErrorCode
from hazard_rate.models.rates import HazardScore

WRI_SCALE_MAX = 100.0


def normalize_hazard(
    scores: dict[str, HazardScore],
    economic_rates: dict[str, float],
    denominator: str = "observed",
) -> dict[str, float]:
    """
    i_hazard = wri / max(wri) * max(i_economic).

    The country with the highest score receives exactly the highest
    averaged economic rate, so no hazard rate can exceed it.

    Args:
        scores: iso3 -> resolved WRI score
        economic_rates: iso3 -> averaged economic rate (all countries)
        denominator: 'observed' divides by the highest score, '100' by the scale maximum

    Returns:
        iso3 -> normalized hazard rate

    Raises:
        AnalysisError: EMPTY_INPUT for empty inputs or an all-zero score set
    """
    if not scores or not economic_rates:
        raise AnalysisError(ErrorCode.EMPTY_INPUT, "hazard normalization needs scores and economic rates")

    if denominator == "100":
        wri_max = WRI_SCALE_MAX
    else:
        wri_max = max(s.wri for s in scores.values())
    if wri_max <= 0:
        raise AnalysisError(ErrorCode.EMPTY_INPUT, "all hazard scores are zero")

    econ_max = max(economic_rates.values())
    return {iso3: score.wri / wri_max * econ_max for iso3, score in sorted(scores.items())}

"""LCOH differences between discounting schemes."""

import structlog

from hazard_rate.errors import AnalysisError, ErrorCode
from hazard_rate.models.analysis import ComparisonRecord

logger = structlog.get_logger()

MAP_CLIP_LIMIT = 2.0


def compare_schemes(
    results_a: dict[str, float],
    results_b: dict[str, float],
) -> list[ComparisonRecord]:
    """
    Per-country LCOH change from baseline scheme a to scheme b.

    Args:
        results_a: iso3 -> baseline LCOH (USD/kg)
        results_b: iso3 -> new LCOH (USD/kg)

    Returns:
        ComparisonRecords sorted by rel descending, then iso3

    Raises:
        AnalysisError: COUNTRY_MISMATCH, ZERO_BASELINE
    """
    if set(results_a) != set(results_b):
        only_a = sorted(set(results_a) - set(results_b))
        only_b = sorted(set(results_b) - set(results_a))
        raise AnalysisError(
            ErrorCode.COUNTRY_MISMATCH,
            f"country sets differ (only in a: {only_a}, only in b: {only_b})",
            only_a=only_a,
            only_b=only_b,
        )

    zero = sorted(iso3 for iso3, value in results_a.items() if value <= 0)
    if zero:
        raise AnalysisError(
            ErrorCode.ZERO_BASELINE, f"baseline LCOH not positive for {zero}", countries=zero
        )

    records = [
        ComparisonRecord(iso3=iso3, lcoh_a=results_a[iso3], lcoh_b=results_b[iso3])
        for iso3 in results_a
    ]
    records.sort(key=lambda r: (-r.rel, r.iso3))
    logger.info("Compared schemes", countries=len(records))
    return records


def uniform_gap(
    results_specific: dict[str, float],
    results_uniform: dict[str, float],
) -> list[ComparisonRecord]:
    """Change from the uniform-rate LCOH (baseline) to the country-specific LCOH."""
    return compare_schemes(results_uniform, results_specific)


def clip_annotation(delta: float, limit: float = MAP_CLIP_LIMIT) -> float:
    """Value used to color delta maps, clipped to [-limit, limit]."""
    return max(-limit, min(limit, delta))

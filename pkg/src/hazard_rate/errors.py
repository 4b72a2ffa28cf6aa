"""Error types shared across the pipeline."""

from enum import Enum
from typing import Any


class ErrorCode(str, Enum):
    """Machine-readable failure codes."""

    MALFORMED_ROW = "MALFORMED_ROW"
    UNKNOWN_COUNTRY = "UNKNOWN_COUNTRY"
    UNKNOWN_GRADE = "UNKNOWN_GRADE"
    OUT_OF_RANGE = "OUT_OF_RANGE"
    UNRESOLVED_COUNTRY = "UNRESOLVED_COUNTRY"
    MISSING_YEAR = "MISSING_YEAR"
    NO_DATA_IN_WINDOW = "NO_DATA_IN_WINDOW"
    EMPTY_INPUT = "EMPTY_INPUT"
    WEIGHT_OUT_OF_RANGE = "WEIGHT_OUT_OF_RANGE"
    DEGENERATE_VARIANCE = "DEGENERATE_VARIANCE"
    NEGATIVE_RATE = "NEGATIVE_RATE"
    ZERO_LIFETIME = "ZERO_LIFETIME"
    NON_INTEGER_LIFETIME = "NON_INTEGER_LIFETIME"
    INFEASIBLE_INPUT = "INFEASIBLE_INPUT"
    INFEASIBLE = "INFEASIBLE"
    UNBOUNDED = "UNBOUNDED"
    ZERO_DEMAND = "ZERO_DEMAND"
    NEGATIVE_INPUT = "NEGATIVE_INPUT"
    INSUFFICIENT_DATA = "INSUFFICIENT_DATA"
    COUNTRY_MISMATCH = "COUNTRY_MISMATCH"
    ZERO_BASELINE = "ZERO_BASELINE"
    CONFIG_ERROR = "CONFIG_ERROR"


class HazardRateError(ValueError):
    """
    Base error for every failure raised by hazard_rate.

    Subclasses ValueError so callers that only care about bad input can
    catch the builtin.

    Attributes:
        code: ErrorCode identifying the failure
        context: Extra key/value detail (path, row, iso3, ...)
    """

    def __init__(self, code: ErrorCode, message: str, **context: Any):
        self.code = code
        self.context = context
        super().__init__(f"{code.value}: {message}")


class InputError(HazardRateError):
    """Malformed, missing or out-of-range input data."""


class UnresolvedCountryError(HazardRateError):
    """One or more countries could not be assigned a rate by any source."""

    def __init__(self, countries: list[str]):
        self.countries = sorted(countries)
        super().__init__(
            ErrorCode.UNRESOLVED_COUNTRY,
            f"{len(self.countries)} countries unresolved: {', '.join(self.countries)}",
            countries=self.countries,
        )


class ModelError(HazardRateError):
    """The optimization problem cannot be built or solved."""


class AnalysisError(HazardRateError):
    """Comparison or statistics inputs are inconsistent."""

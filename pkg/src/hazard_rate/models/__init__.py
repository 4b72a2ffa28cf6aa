"""Data models."""

from hazard_rate.models.analysis import ComparisonRecord, RangeHistogram, YearStats
from hazard_rate.models.energy import (
    CapacityFactorProfile,
    DispatchSolution,
    LCOHResult,
    SystemCase,
    Technology,
    TechnologyParams,
)
from hazard_rate.models.rates import (
    CountryCode,
    DiscountRateRecord,
    EconomicRateSeries,
    EconomicSource,
    GradeTable,
    HazardScore,
    HazardSource,
    Override,
    RatingObservation,
    RegionCostTable,
)

__all__ = [
    "CapacityFactorProfile",
    "ComparisonRecord",
    "CountryCode",
    "DiscountRateRecord",
    "DispatchSolution",
    "EconomicRateSeries",
    "EconomicSource",
    "GradeTable",
    "HazardScore",
    "HazardSource",
    "LCOHResult",
    "Override",
    "RangeHistogram",
    "RatingObservation",
    "RegionCostTable",
    "SystemCase",
    "Technology",
    "TechnologyParams",
    "YearStats",
]

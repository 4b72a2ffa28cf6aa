"""Data models for comparison analytics."""

from dataclasses import dataclass, field
from typing import Any


@dataclass
class YearStats:
    """Cross-country distribution of economic rates in one year."""

    year: int
    count: int
    mean: float
    median: float
    q1: float
    q3: float
    iqr: float
    std: float
    min_val: float
    max_val: float
    outliers: list[tuple[str, float]] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        """Row for stats.csv."""
        return {
            "year": self.year,
            "count": self.count,
            "mean": self.mean,
            "median": self.median,
            "q1": self.q1,
            "q3": self.q3,
            "iqr": self.iqr,
            "std": self.std,
            "min": self.min_val,
            "max": self.max_val,
            "outliers": ";".join(iso3 for iso3, _ in self.outliers),
        }


STATS_COLUMNS = ["year", "count", "mean", "median", "q1", "q3", "iqr", "std", "min", "max", "outliers"]


@dataclass(frozen=True)
class ComparisonRecord:
    """
    LCOH of one country under a baseline scheme (a) and a new scheme (b).

    delta = lcoh_b - lcoh_a and rel = delta / lcoh_a, so both share a sign.
    """

    iso3: str
    lcoh_a: float
    lcoh_b: float

    @property
    def delta(self) -> float:
        return self.lcoh_b - self.lcoh_a

    @property
    def rel(self) -> float:
        return (self.lcoh_b - self.lcoh_a) / self.lcoh_a

    def to_dict(self) -> dict[str, Any]:
        """Row for comparison.csv."""
        return {
            "iso3": self.iso3,
            "lcoh_base": self.lcoh_a,
            "lcoh_new": self.lcoh_b,
            "delta": self.delta,
            "rel": self.rel,
        }


COMPARISON_COLUMNS = ["iso3", "lcoh_base", "lcoh_new", "delta", "rel"]


@dataclass
class RangeHistogram:
    """Per-country rate ranges plus binned counts."""

    ranges: dict[str, float]
    bin_width: float
    bin_edges: list[float]
    counts: list[int]

"""Data models for rating inputs and discount rates."""

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

_ISO3 = re.compile(r"^[A-Z]{3}$")


class EconomicSource(str, Enum):
    """Economic rating sources, in cascade order."""

    DAMODARAN = "DAMODARAN"
    WIKIRATING = "WIKIRATING"
    CREDENDO = "CREDENDO"
    OVERRIDE = "OVERRIDE"


class HazardSource(str, Enum):
    """Natural-hazard sources, in cascade order."""

    WRI = "WRI"
    NEIGHBOR_OVERRIDE = "NEIGHBOR_OVERRIDE"


# Lower rank wins
ECONOMIC_CASCADE = [
    EconomicSource.DAMODARAN,
    EconomicSource.WIKIRATING,
    EconomicSource.CREDENDO,
    EconomicSource.OVERRIDE,
]
HAZARD_CASCADE = [HazardSource.WRI, HazardSource.NEIGHBOR_OVERRIDE]


@dataclass(frozen=True, order=True)
class CountryCode:
    """ISO 3166 alpha-3 code with its display name."""

    iso3: str
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if not _ISO3.match(self.iso3):
            raise ValueError(f"iso3 must be 3 uppercase ASCII letters, got {self.iso3!r}")


@dataclass(frozen=True)
class RatingObservation:
    """
    One raw country risk datum from one source in one year.

    Attributes:
        country: Country the datum belongs to
        source: Which economic source produced it
        year: Calendar year, or None for single-vintage sources
        raw: Source-native value (spread, grade label, 1-7 score, literal rate)
        rate: Value mapped onto the common discount-rate scale, in [0, 1]
    """

    country: CountryCode
    source: EconomicSource
    year: int | None
    raw: Any
    rate: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.rate <= 1.0:
            raise ValueError(f"rate must be in [0, 1], got {self.rate}")


@dataclass(frozen=True)
class HazardScore:
    """World Risk Report score of one country."""

    country: CountryCode
    wri: float
    year: int
    source: HazardSource = HazardSource.WRI

    def __post_init__(self) -> None:
        if not 0.0 <= self.wri <= 100.0:
            raise ValueError(f"wri must be in [0, 100], got {self.wri}")


@dataclass(frozen=True)
class GradeTable:
    """Ordered 21-step grade scale, best grade first."""

    entries: tuple[tuple[str, float], ...]

    SIZE = 21

    def __post_init__(self) -> None:
        if len(self.entries) != self.SIZE:
            raise ValueError(f"grade table needs exactly {self.SIZE} entries, got {len(self.entries)}")
        rates = [rate for _, rate in self.entries]
        if any(b <= a for a, b in zip(rates, rates[1:])):
            raise ValueError("grade table rates must be strictly increasing")
        if rates[0] < 0.0 or rates[-1] > 1.0:
            raise ValueError("grade table rates must lie in [0, 1]")

    def rate_at(self, index: int) -> float:
        """Rate of the entry at a 0-based position."""
        return self.entries[index][1]

    def rate_for_grade(self, grade: str) -> float | None:
        """Rate for a grade label (case-insensitive), or None when unknown."""
        wanted = grade.strip().upper()
        for label, rate in self.entries:
            if label.upper() == wanted:
                return rate
        return None

    @property
    def labels(self) -> list[str]:
        return [label for label, _ in self.entries]


@dataclass(frozen=True)
class RegionCost:
    """Wind and PV cost assumptions for one region (USD2023)."""

    region: str
    wind_capex: float
    pv_capex: float
    wind_opex: float
    pv_opex: float


@dataclass
class RegionCostTable:
    """Region costs plus the country -> region assignment."""

    costs: dict[str, RegionCost]
    assignment: dict[str, str]

    def for_country(self, iso3: str) -> RegionCost | None:
        """Cost assumptions that apply to a country, or None when unassigned."""
        region = self.assignment.get(iso3)
        return self.costs.get(region) if region is not None else None


@dataclass(frozen=True)
class Override:
    """
    Manual assignment for a country no source covers.

    Exactly one of donor, rate or worst is set.
    """

    country: CountryCode
    donor: str | None = None
    rate: float | None = None
    worst: bool = False
    target: str = "both"

    @property
    def applies_to_economic(self) -> bool:
        return self.target in ("both", "economic")

    @property
    def applies_to_hazard(self) -> bool:
        if self.target == "hazard":
            return True
        # Literal rates are economic-scale values; only donors carry over to hazard
        return self.target == "both" and self.donor is not None


@dataclass
class EconomicRateSeries:
    """
    Economic rate samples of one country.

    Single-vintage sources (WikiRating, Credendo, overrides) hold one
    undated value that stands in for every averaging window.
    """

    country: CountryCode
    samples: dict[int, float] = field(default_factory=dict)
    source: EconomicSource = EconomicSource.DAMODARAN
    single_vintage: float | None = None
    donor: str | None = None

    def __post_init__(self) -> None:
        values = list(self.samples.values())
        if self.single_vintage is not None:
            values.append(self.single_vintage)
        if any(not 0.0 <= v <= 1.0 for v in values):
            raise ValueError(f"{self.country.iso3}: rates must be in [0, 1]")
        self.samples = dict(sorted(self.samples.items()))

    @property
    def years(self) -> list[int]:
        return list(self.samples)

    @property
    def values(self) -> list[float]:
        if self.single_vintage is not None:
            return [self.single_vintage]
        return list(self.samples.values())


@dataclass(frozen=True)
class ResolvedHazard:
    """Hazard score that won the cascade, with provenance."""

    score: HazardScore
    donor: str | None = None

    @property
    def source(self) -> HazardSource:
        return self.score.source


@dataclass(frozen=True)
class DiscountRateRecord:
    """
    Final discount rate of one country and how it was built.

    Attributes:
        country: Country
        i_economic: Window-averaged economic rate
        i_hazard: Hazard rate normalized onto the economic scale
        weight_a: Economic share a
        weight_b: Hazard share b = 1 - a
        i_final: a * i_economic + b * i_hazard
        econ_source: Source that won the economic cascade
        hazard_source: Source that won the hazard cascade
        window_years: Averaging window length
        samples_used: Samples inside the window
    """

    country: CountryCode
    i_economic: float
    i_hazard: float
    weight_a: float
    weight_b: float
    i_final: float
    econ_source: EconomicSource
    hazard_source: HazardSource
    window_years: int
    samples_used: int

    def to_dict(self) -> dict[str, Any]:
        """Row for discount_rates.csv."""
        return {
            "iso3": self.country.iso3,
            "name": self.country.name,
            "i_economic": self.i_economic,
            "i_hazard": self.i_hazard,
            "a": self.weight_a,
            "b": self.weight_b,
            "i_final": self.i_final,
            "econ_source": self.econ_source.value,
            "hazard_source": self.hazard_source.value,
            "window_years": self.window_years,
            "samples_used": self.samples_used,
        }


DISCOUNT_RATE_COLUMNS = [
    "iso3", "name", "i_economic", "i_hazard", "a", "b", "i_final",
    "econ_source", "hazard_source", "window_years", "samples_used",
]

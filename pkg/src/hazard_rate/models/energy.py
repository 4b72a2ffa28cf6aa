"""Data models for the per-country hydrogen supply system."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np

from hazard_rate.errors import ErrorCode, ModelError
from hazard_rate.models.rates import CountryCode

HOURS_PER_YEAR = 8760
LHV_KWH_PER_KG = 33.33


class Technology(str, Enum):
    """Technologies of the supply chain, in objective order."""

    WIND = "wind"
    PV = "pv"
    ELECTROLYZER = "electrolyzer"
    STORAGE = "storage"


@dataclass(frozen=True)
class TechnologyParams:
    """
    Techno-economic bundle of one technology in one country.

    Attributes:
        name: Technology
        capex: USD2023 per kW (per kWh for storage)
        opex_frac: Fixed operating cost as a fraction of capex per year
        lifetime: Economic lifetime in years
        efficiency: Electrolyzer kWh_H2 per kWh_el, or storage charge efficiency
        discharge_efficiency: Storage discharge efficiency (1.0 elsewhere)
    """

    name: Technology
    capex: float
    opex_frac: float
    lifetime: int
    efficiency: float = 1.0
    discharge_efficiency: float = 1.0

    def __post_init__(self) -> None:
        if self.capex <= 0:
            raise ValueError(f"{self.name.value}: capex must be > 0")
        if not 0.0 <= self.opex_frac < 1.0:
            raise ValueError(f"{self.name.value}: opex_frac must be in [0, 1)")
        if self.lifetime < 1:
            raise ValueError(f"{self.name.value}: lifetime must be >= 1")
        for eff in (self.efficiency, self.discharge_efficiency):
            if not 0.0 < eff <= 1.0:
                raise ValueError(f"{self.name.value}: efficiencies must be in (0, 1]")


@dataclass(frozen=True)
class CapacityFactorProfile:
    """Per-step capacity factors of one generation technology."""

    technology: Technology
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 1 or values.size == 0:
            raise ValueError("profile must be a non-empty 1-D sequence")
        if np.any(values < 0.0) or np.any(values > 1.0) or np.any(np.isnan(values)):
            raise ValueError(f"{self.technology.value}: capacity factors must lie in [0, 1]")
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return int(self.values.size)


@dataclass(frozen=True)
class SystemCase:
    """Optimization input of one country."""

    country: CountryCode
    discount_rate: float
    wind: CapacityFactorProfile
    pv: CapacityFactorProfile
    annual_demand_kg: float
    technologies: dict[Technology, TechnologyParams]
    lhv: float = LHV_KWH_PER_KG

    def __post_init__(self) -> None:
        if self.annual_demand_kg <= 0:
            raise ModelError(
                ErrorCode.ZERO_DEMAND,
                f"{self.country.iso3}: annual demand must be > 0",
                iso3=self.country.iso3,
            )
        if len(self.wind) != len(self.pv):
            raise ValueError("wind and pv profiles must have equal length")
        missing = set(Technology) - set(self.technologies)
        if missing:
            raise ValueError(f"missing technologies: {sorted(t.value for t in missing)}")

    @property
    def steps(self) -> int:
        return len(self.wind)

    @property
    def step_hours(self) -> float:
        """Hours of the year each step stands for."""
        return HOURS_PER_YEAR / self.steps

    @property
    def annual_demand_kwh(self) -> float:
        return self.annual_demand_kg * self.lhv

    def with_discount_rate(self, rate: float) -> "SystemCase":
        """Same case under another discount rate."""
        return SystemCase(
            country=self.country,
            discount_rate=rate,
            wind=self.wind,
            pv=self.pv,
            annual_demand_kg=self.annual_demand_kg,
            technologies=self.technologies,
            lhv=self.lhv,
        )

    def with_demand(self, annual_demand_kg: float) -> "SystemCase":
        """Same case with another annual demand."""
        return SystemCase(
            country=self.country,
            discount_rate=self.discount_rate,
            wind=self.wind,
            pv=self.pv,
            annual_demand_kg=annual_demand_kg,
            technologies=self.technologies,
            lhv=self.lhv,
        )


@dataclass
class DispatchSolution:
    """
    Optimal capacities and hourly operation.

    Capacities: wind/pv in kW, electrolyzer in kW_el, storage in kWh_H2.
    Per-step arrays are energies per step in kWh.
    """

    cap_wind: float
    cap_pv: float
    cap_ely: float
    cap_storage: float
    electricity: np.ndarray
    hydrogen: np.ndarray
    charge: np.ndarray
    discharge: np.ndarray
    soc: np.ndarray
    objective: float

    def capacity(self, technology: Technology) -> float:
        return {
            Technology.WIND: self.cap_wind,
            Technology.PV: self.cap_pv,
            Technology.ELECTROLYZER: self.cap_ely,
            Technology.STORAGE: self.cap_storage,
        }[technology]


@dataclass
class LCOHResult:
    """Levelized cost of hydrogen of one country."""

    country: CountryCode
    lcoh: float
    breakdown: dict[Technology, float]
    solution: DispatchSolution
    discount_rate: float
    annual_demand_kg: float
    status: str = "ok"
    extra: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        """Row for lcoh.csv."""
        return {
            "iso3": self.country.iso3,
            "lcoh_usd_per_kg": self.lcoh,
            "cap_wind_kw": self.solution.cap_wind,
            "cap_pv_kw": self.solution.cap_pv,
            "cap_ely_kw": self.solution.cap_ely,
            "cap_storage_kwh": self.solution.cap_storage,
            "objective_usd_yr": self.solution.objective,
            "discount_rate": self.discount_rate,
            "status": self.status,
        }


LCOH_COLUMNS = [
    "iso3", "lcoh_usd_per_kg", "cap_wind_kw", "cap_pv_kw", "cap_ely_kw",
    "cap_storage_kwh", "objective_usd_yr", "discount_rate", "status",
]

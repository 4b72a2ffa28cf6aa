"""Shared test fixtures."""

import math
from pathlib import Path

import numpy as np
import pytest
import structlog

from hazard_rate.config import RunConfig, build_config
from hazard_rate.data.registry import load_country_registry
from hazard_rate.models.energy import (
    CapacityFactorProfile,
    SystemCase,
    Technology,
    TechnologyParams,
)
from hazard_rate.models.rates import CountryCode, GradeTable

GRADE_LABELS = [
    "AAA", "AA+", "AA", "AA-", "A+", "A", "A-", "BBB+", "BBB", "BBB-", "BB+",
    "BB", "BB-", "B+", "B", "B-", "CCC+", "CCC", "CCC-", "CC", "C",
]
GRADE_RATES = [
    0.0046, 0.0060, 0.0075, 0.0090, 0.0110, 0.0130, 0.0155, 0.0185, 0.0220, 0.0260, 0.0305,
    0.0360, 0.0425, 0.0500, 0.0590, 0.0700, 0.0850, 0.1050, 0.1350, 0.1900, 0.2800,
]

REGION_ROWS = [
    ("Africa", 1630, 510, 2.6, 3.7),
    ("Asia Pacific", 1728, 479, 2.6, 3.2),
    ("Central and South America", 910, 312, 2.6, 3.3),
    ("Eurasia", 1426, 635, 2.6, 3.6),
    ("Europe", 1614, 427, 2.6, 2.9),
    ("Middle East", 1666, 229, 2.6, 3.6),
    ("North America", 1114, 458, 2.8, 3.6),
    ("China", 999, 291, 2.5, 3.6),
    ("India", 999, 250, 2.7, 3.3),
    ("Japan", 3185, 895, 2.6, 2.6),
]

INFLATION = {
    2015: 0.001, 2016: 0.013, 2017: 0.021, 2018: 0.024, 2019: 0.018,
    2020: 0.012, 2021: 0.047, 2022: 0.080, 2023: 0.041,
}

# iso3 -> (mean wind capacity factor, PV peak, wind phase in steps)
PROFILE_SHAPES = {
    "CHN": (0.33, 0.65, 4),
    "DEU": (0.38, 0.45, 10),
    "JPN": (0.25, 0.55, 0),
    "KGZ": (0.32, 0.60, 2),
    "PHL": (0.28, 0.70, 8),
    "QAT": (0.30, 0.85, 3),
    "SAU": (0.35, 0.90, 5),
}
ZERO_PROFILE_COUNTRY = "ISL"
NO_PROFILE_COUNTRY = "FRA"
FIXTURE_POTENTIAL_KG = 4_000_000.0
TOY_STEPS = 24

# An island with no source coverage; its only economic entry is an override
UNCOVERED_ISLAND = "AIA"


def toy_profiles(
    wind_mean: float, pv_peak: float, phase: int, steps: int = TOY_STEPS
) -> tuple[np.ndarray, np.ndarray]:
    """Deterministic daily wind and PV shapes over `steps` steps."""
    t = np.arange(steps)
    hour = t * 24.0 / steps
    wind = np.clip(wind_mean + 0.15 * np.cos(2 * math.pi * (hour + phase) / 24.0), 0.0, 1.0)
    pv = np.where((hour >= 6) & (hour <= 18), pv_peak * np.sin(math.pi * (hour - 6) / 12.0), 0.0)
    return np.round(wind, 6), np.round(np.clip(pv, 0.0, 1.0), 6)


def damodaran_rate(index: int, year: int) -> float:
    # year term cycles independently of the country level, so averaging smooths
    return round(0.04 + 0.003 * (index % 50) + 0.004 * ((year + index // 50) % 5), 4)


def wri_score(iso3: str, index: int) -> float:
    if iso3 == "PHL":
        return 46.86
    return round(1.0 + (index * 37 % 400) / 10.0, 2)


def _write(path: Path, header: str, rows: list[str]) -> None:
    path.write_text("\n".join([header, *rows]) + "\n", encoding="utf-8")


def write_dataset(root: Path, skip_overrides: frozenset[str] = frozenset()) -> Path:
    """
    Write a complete 254-country input set under root.

    Source coverage rotates with each country's position in the registry:
    full Damodaran 2015-2024, sparse Damodaran, stale Damodaran backed by
    WikiRating, WikiRating only, Credendo only, or an economic override.
    Every sixth country has no WRI score and borrows ABW's via an override.
    """
    root.mkdir(parents=True, exist_ok=True)
    codes = [c.iso3 for c in load_country_registry().countries]

    damodaran: list[str] = []
    wikirating: list[str] = []
    credendo: list[str] = []
    overrides: list[str] = []
    wri: list[str] = []

    for i, iso3 in enumerate(codes):
        if i % 4 == 0:
            damodaran += [f"{iso3},{y},{damodaran_rate(i, y)}" for y in range(2015, 2025)]
        elif i % 8 == 1:
            damodaran += [f"{iso3},{y},{damodaran_rate(i, y)}" for y in (2016, 2018, 2020)]
        elif i % 8 == 5:
            damodaran += [f"{iso3},{y},{damodaran_rate(i, y)}" for y in range(2008, 2013)]
            wikirating.append(f"{iso3},{GRADE_LABELS[i % 21]}")
        elif i % 4 == 2:
            wikirating.append(f"{iso3},{GRADE_LABELS[i % 21]}")
        elif i % 3 != 0:
            credendo.append(f"{iso3},{i % 7 + 1}")
        elif iso3 not in skip_overrides:
            value = ("WORST", "0.09", "ABW")[(i // 4) % 3]
            overrides.append(f"{iso3},{value},economic")

        if i % 6 == 5:
            if iso3 not in skip_overrides:
                overrides.append(f"{iso3},ABW,hazard")
        else:
            wri.append(f"{iso3},2024,{wri_score(iso3, i)}")

    _write(root / "damodaran.csv", "iso3,year,rate", damodaran)
    _write(root / "wikirating.csv", "iso3,grade", wikirating)
    _write(root / "credendo.csv", "iso3,score", credendo)
    _write(root / "wri.csv", "iso3,year,score", wri)
    _write(root / "overrides.csv", "iso3,donor_iso3_or_rate,target", overrides)
    _write(
        root / "grade_table.csv",
        "grade,rate",
        [f"{g},{r}" for g, r in zip(GRADE_LABELS, GRADE_RATES, strict=True)],
    )
    _write(
        root / "regions.csv",
        "region,wind_capex,pv_capex,wind_opex_pct,pv_opex_pct",
        [",".join(str(v) for v in row) for row in REGION_ROWS],
    )
    _write(root / "inflation.csv", "year,rate", [f"{y},{r}" for y, r in INFLATION.items()])

    potential_countries = sorted([*PROFILE_SHAPES, ZERO_PROFILE_COUNTRY, NO_PROFILE_COUNTRY])
    _write(
        root / "potentials.csv",
        "iso3,total_potential_kg",
        [f"{iso3},{FIXTURE_POTENTIAL_KG}" for iso3 in potential_countries],
    )

    profiles = root / "profiles"
    profiles.mkdir(exist_ok=True)
    for iso3, shape in PROFILE_SHAPES.items():
        wind, pv = toy_profiles(*shape)
        _write(
            profiles / f"{iso3}.csv",
            "step,cf_wind,cf_pv",
            [f"{t},{w},{p}" for t, (w, p) in enumerate(zip(wind, pv, strict=True))],
        )
    _write(
        profiles / f"{ZERO_PROFILE_COUNTRY}.csv",
        "step,cf_wind,cf_pv",
        [f"{t},0.0,0.0" for t in range(TOY_STEPS)],
    )
    return root


@pytest.fixture
def dataset_dir(tmp_path: Path) -> Path:
    """Complete fixture input set."""
    return write_dataset(tmp_path / "inputs")


@pytest.fixture
def run_config(dataset_dir: Path, tmp_path: Path) -> RunConfig:
    """Run configuration pointing at the fixture inputs."""
    return build_config(
        {
            "data": {"data_dir": str(dataset_dir)},
            "output": {"out_dir": str(tmp_path / "out")},
            "parallel": {"jobs": 1},
        }
    )


@pytest.fixture
def grade_table() -> GradeTable:
    """The 21-step fixture grade table (0.0046 .. 0.28)."""
    return GradeTable(entries=tuple(zip(GRADE_LABELS, GRADE_RATES, strict=True)))


def table3_technologies(
    wind_capex: float = 1666.0,
    pv_capex: float = 229.0,
    wind_opex: float = 0.026,
    pv_opex: float = 0.036,
    ely_capex: float = 470.0,
) -> dict[Technology, TechnologyParams]:
    """Country-independent parameters plus Middle East generation costs by default."""
    return {
        Technology.WIND: TechnologyParams(Technology.WIND, wind_capex, wind_opex, 20),
        Technology.PV: TechnologyParams(Technology.PV, pv_capex, pv_opex, 20),
        Technology.ELECTROLYZER: TechnologyParams(
            Technology.ELECTROLYZER, ely_capex, 0.03, 10, efficiency=0.7
        ),
        Technology.STORAGE: TechnologyParams(
            Technology.STORAGE, 20.0, 0.02, 30, efficiency=0.98, discharge_efficiency=0.998
        ),
    }


def make_case(
    iso3: str = "QAT",
    shape: tuple[float, float, int] = PROFILE_SHAPES["QAT"],
    discount_rate: float = 0.08,
    demand_kg: float = 100_000.0,
    steps: int = TOY_STEPS,
    technologies: dict[Technology, TechnologyParams] | None = None,
) -> SystemCase:
    """Small system case with deterministic daily profiles."""
    wind, pv = toy_profiles(*shape, steps=steps)
    return SystemCase(
        country=CountryCode(iso3),
        discount_rate=discount_rate,
        wind=CapacityFactorProfile(Technology.WIND, wind),
        pv=CapacityFactorProfile(Technology.PV, pv),
        annual_demand_kg=demand_kg,
        technologies=technologies or table3_technologies(),
    )


@pytest.fixture
def toy24() -> SystemCase:
    """24-step Qatar-style case at 8% with 100 t/yr demand."""
    return make_case()


@pytest.fixture(autouse=True)
def reset_structlog():
    """Drop CLI logging setup bound to a runner stream that is closed afterwards."""
    yield
    structlog.reset_defaults()

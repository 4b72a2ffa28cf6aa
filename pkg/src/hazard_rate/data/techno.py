"""Techno-economic inputs: inflation, regional costs, profiles and potentials."""

from pathlib import Path

import numpy as np
import structlog

from hazard_rate.data.registry import CountryRegistry, load_country_registry
from hazard_rate.data.sources import parse_float, parse_int, read_table
from hazard_rate.errors import ErrorCode, InputError
from hazard_rate.models.energy import CapacityFactorProfile, Technology
from hazard_rate.models.rates import RegionCost, RegionCostTable

logger = structlog.get_logger()

BASE_YEAR = 2023

INFLATION_COLUMNS = ["year", "rate"]
REGION_COLUMNS = ["region", "wind_capex", "pv_capex", "wind_opex_pct", "pv_opex_pct"]
ASSIGNMENT_COLUMNS = ["iso3", "region"]
PROFILE_COLUMNS = ["step", "cf_wind", "cf_pv"]
POTENTIAL_COLUMNS = ["iso3", "total_potential_kg"]


def load_inflation(path: Path | str) -> dict[int, float]:
    """Annual inflation rates (year,rate) as fractions."""
    path = Path(path)
    df = read_table(path, INFLATION_COLUMNS)
    series: dict[int, float] = {}
    for row_number, row in enumerate(df.itertuples(index=False), start=1):
        year = parse_int(row.year, "year", path, row_number)
        series[year] = parse_float(row.rate, "rate", path, row_number)
    return dict(sorted(series.items()))


def adjust_to_base_year(
    value: float,
    from_year: int,
    inflation: dict[int, float],
    base_year: int = BASE_YEAR,
) -> float:
    """
    Carry a USD amount forward to base-year dollars.

    Compounds (1 + rate) for every year from from_year + 1 through base_year.

    Args:
        value: Amount in from_year USD
        from_year: Currency year of value
        inflation: Year -> annual inflation rate
        base_year: Target currency year

    Returns:
        Amount in base-year USD

    Raises:
        InputError: MISSING_YEAR when a needed year has no rate
    """
    if from_year > base_year:
        raise InputError(
            ErrorCode.MISSING_YEAR,
            f"cost year {from_year} is after base year {base_year}",
            from_year=from_year,
        )

    missing = [y for y in range(from_year + 1, base_year + 1) if y not in inflation]
    if missing:
        raise InputError(
            ErrorCode.MISSING_YEAR,
            f"inflation series lacks years {missing}",
            missing=missing,
        )

    factor = 1.0
    for year in range(from_year + 1, base_year + 1):
        factor *= 1.0 + inflation[year]
    return value * factor


def load_region_table(
    costs_path: Path | str,
    assignment_path: Path | str | None = None,
    inflation: dict[int, float] | None = None,
    base_year: int = BASE_YEAR,
    registry: CountryRegistry | None = None,
) -> RegionCostTable:
    """
    Load regional wind/PV costs and the country -> region assignment.

    Cost rows: region,wind_capex,pv_capex,wind_opex_pct,pv_opex_pct[,cost_year].
    Regions listed more than once are averaged arithmetically after
    inflation adjustment. Opex is given in percent of capex per year.

    Args:
        costs_path: Regional cost CSV
        assignment_path: iso3,region CSV; the registry default when None
        inflation: Year -> rate, needed when any cost_year precedes base_year
        base_year: Currency year of the table
        registry: Country registry (packaged default if None)

    Returns:
        RegionCostTable

    Raises:
        InputError: MALFORMED_ROW, OUT_OF_RANGE, UNKNOWN_COUNTRY, MISSING_YEAR
    """
    costs_path = Path(costs_path)
    registry = registry or load_country_registry()
    df = read_table(costs_path, REGION_COLUMNS)
    has_year = "cost_year" in df.columns

    collected: dict[str, list[tuple[float, float, float, float]]] = {}
    for row_number, row in enumerate(df.itertuples(index=False), start=1):
        where = {"path": str(costs_path), "row": row_number}
        wind_capex = parse_float(row.wind_capex, "wind_capex", costs_path, row_number)
        pv_capex = parse_float(row.pv_capex, "pv_capex", costs_path, row_number)
        wind_opex = parse_float(row.wind_opex_pct, "wind_opex_pct", costs_path, row_number) / 100.0
        pv_opex = parse_float(row.pv_opex_pct, "pv_opex_pct", costs_path, row_number) / 100.0

        if wind_capex <= 0 or pv_capex <= 0:
            raise InputError(ErrorCode.OUT_OF_RANGE, f"{costs_path.name} row {row_number}: capex must be > 0", **where)
        if not (0 < wind_opex < 1 and 0 < pv_opex < 1):
            raise InputError(ErrorCode.OUT_OF_RANGE, f"{costs_path.name} row {row_number}: opex must be in (0, 100)%", **where)

        if has_year and row.cost_year:
            cost_year = parse_int(row.cost_year, "cost_year", costs_path, row_number)
            if cost_year != base_year:
                wind_capex = adjust_to_base_year(wind_capex, cost_year, inflation or {}, base_year)
                pv_capex = adjust_to_base_year(pv_capex, cost_year, inflation or {}, base_year)

        collected.setdefault(row.region, []).append((wind_capex, pv_capex, wind_opex, pv_opex))

    costs = {}
    for region, rows in collected.items():
        mean = np.mean(np.array(rows), axis=0)
        costs[region] = RegionCost(
            region=region,
            wind_capex=float(mean[0]),
            pv_capex=float(mean[1]),
            wind_opex=float(mean[2]),
            pv_opex=float(mean[3]),
        )

    if assignment_path is None:
        assignment = registry.default_regions
    else:
        assignment_path = Path(assignment_path)
        adf = read_table(assignment_path, ASSIGNMENT_COLUMNS)
        assignment = {}
        for row_number, row in enumerate(adf.itertuples(index=False), start=1):
            where = {"path": str(assignment_path), "row": row_number}
            country = registry.normalize(row.iso3, **where)
            if country.iso3 in assignment:
                raise InputError(
                    ErrorCode.MALFORMED_ROW,
                    f"{assignment_path.name} row {row_number}: {country.iso3} assigned twice",
                    **where,
                )
            assignment[country.iso3] = row.region

    unassigned = sorted(c.iso3 for c in registry.countries if c.iso3 not in assignment)
    unknown_regions = sorted({r for r in assignment.values() if r not in costs})
    if unassigned:
        raise InputError(ErrorCode.MALFORMED_ROW, f"countries without a region: {unassigned}", row=0)
    if unknown_regions:
        raise InputError(ErrorCode.MALFORMED_ROW, f"regions without costs: {unknown_regions}", row=0)

    logger.info("Loaded region costs", regions=len(costs), countries=len(assignment))
    return RegionCostTable(costs=costs, assignment=assignment)


def load_profiles(path: Path | str) -> tuple[CapacityFactorProfile, CapacityFactorProfile]:
    """
    Load one country's capacity factors (step,cf_wind,cf_pv).

    Returns:
        (wind, pv) profiles ordered by step

    Raises:
        InputError: MALFORMED_ROW, OUT_OF_RANGE
    """
    path = Path(path)
    df = read_table(path, PROFILE_COLUMNS)
    if df.empty:
        raise InputError(ErrorCode.MALFORMED_ROW, f"{path.name}: no profile rows", path=str(path), row=0)

    try:
        steps = df["step"].astype(int)
        wind = df["cf_wind"].astype(float).to_numpy()
        pv = df["cf_pv"].astype(float).to_numpy()
    except ValueError as e:
        raise InputError(ErrorCode.MALFORMED_ROW, f"{path.name}: {e}", path=str(path), row=0) from e

    if not steps.is_monotonic_increasing or steps.duplicated().any():
        raise InputError(ErrorCode.MALFORMED_ROW, f"{path.name}: steps must be strictly increasing", path=str(path), row=0)

    try:
        return (
            CapacityFactorProfile(Technology.WIND, wind),
            CapacityFactorProfile(Technology.PV, pv),
        )
    except ValueError as e:
        raise InputError(ErrorCode.OUT_OF_RANGE, f"{path.name}: {e}", path=str(path), row=0) from e


def load_potentials(path: Path | str, registry: CountryRegistry | None = None) -> dict[str, float]:
    """Total hydrogen production potential per country (iso3,total_potential_kg)."""
    path = Path(path)
    registry = registry or load_country_registry()
    df = read_table(path, POTENTIAL_COLUMNS)
    potentials: dict[str, float] = {}
    for row_number, row in enumerate(df.itertuples(index=False), start=1):
        country = registry.normalize(row.iso3, path=str(path), row=row_number)
        potentials[country.iso3] = parse_float(row.total_potential_kg, "total_potential_kg", path, row_number)
    return potentials

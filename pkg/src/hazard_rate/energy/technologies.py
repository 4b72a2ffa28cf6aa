"""Per-country techno-economic parameter sets."""

from hazard_rate.config import TechnologiesConfig, TechnologyConfig
from hazard_rate.data.techno import BASE_YEAR, adjust_to_base_year
from hazard_rate.errors import ErrorCode, InputError
from hazard_rate.models.energy import Technology, TechnologyParams
from hazard_rate.models.rates import RegionCostTable


def _country_capex(
    params: TechnologyConfig,
    iso3: str,
    inflation: dict[int, float] | None,
    base_year: int,
) -> float:
    if iso3 in params.capex_overrides:
        capex = params.capex_overrides[iso3]
    else:
        capex = params.capex
    if params.cost_year != base_year:
        capex = adjust_to_base_year(capex, params.cost_year, inflation or {}, base_year)
    return capex


def technology_set(
    config: TechnologiesConfig,
    region_table: RegionCostTable,
    iso3: str,
    inflation: dict[int, float] | None = None,
    base_year: int = BASE_YEAR,
) -> dict[Technology, TechnologyParams]:
    """
    Assemble the four technology parameter bundles of one country.

    Wind and PV costs come from the country's cost region; electrolyzer and
    storage are country-independent apart from explicit capex overrides.

    Args:
        config: Country-independent parameters
        region_table: Regional wind/PV costs and the country assignment
        iso3: Country code
        inflation: Year -> rate, needed when a cost_year precedes base_year
        base_year: Currency year of the model

    Returns:
        Technology -> TechnologyParams

    Raises:
        InputError: MALFORMED_ROW when the country has no region, MISSING_YEAR
    """
    region = region_table.for_country(iso3)
    if region is None:
        raise InputError(ErrorCode.MALFORMED_ROW, f"{iso3}: no cost region assigned", iso3=iso3)

    ely = config.electrolyzer
    storage = config.storage
    return {
        Technology.WIND: TechnologyParams(
            name=Technology.WIND,
            capex=region.wind_capex,
            opex_frac=region.wind_opex,
            lifetime=config.wind_lifetime,
        ),
        Technology.PV: TechnologyParams(
            name=Technology.PV,
            capex=region.pv_capex,
            opex_frac=region.pv_opex,
            lifetime=config.pv_lifetime,
        ),
        Technology.ELECTROLYZER: TechnologyParams(
            name=Technology.ELECTROLYZER,
            capex=_country_capex(ely, iso3, inflation, base_year),
            opex_frac=ely.opex_frac,
            lifetime=ely.lifetime,
            efficiency=ely.efficiency,
        ),
        Technology.STORAGE: TechnologyParams(
            name=Technology.STORAGE,
            capex=_country_capex(storage, iso3, inflation, base_year),
            opex_frac=storage.opex_frac,
            lifetime=storage.lifetime,
            efficiency=storage.efficiency,
            discharge_efficiency=storage.discharge_efficiency,
        ),
    }

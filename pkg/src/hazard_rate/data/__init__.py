"""Input parsing and source resolution."""

from hazard_rate.data.registry import CountryRegistry, load_country_registry
from hazard_rate.data.resolver import ResolvedRates, resolve_rates
from hazard_rate.data.sources import (
    credendo_to_rate,
    load_grade_table,
    parse_economic_source,
    parse_hazard_source,
    parse_overrides,
)
from hazard_rate.data.techno import (
    adjust_to_base_year,
    load_inflation,
    load_potentials,
    load_profiles,
    load_region_table,
)

__all__ = [
    "CountryRegistry",
    "ResolvedRates",
    "adjust_to_base_year",
    "credendo_to_rate",
    "load_country_registry",
    "load_grade_table",
    "load_inflation",
    "load_potentials",
    "load_profiles",
    "load_region_table",
    "parse_economic_source",
    "parse_hazard_source",
    "parse_overrides",
    "resolve_rates",
]

"""End-to-end orchestration: ingest, synthesize rates, build and solve country cases."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path

import structlog

from hazard_rate.config import RunConfig
from hazard_rate.data.registry import CountryRegistry, load_country_registry
from hazard_rate.data.resolver import ResolvedRates, resolve_rates
from hazard_rate.data.sources import (
    load_grade_table,
    parse_economic_source,
    parse_hazard_source,
    parse_overrides,
)
from hazard_rate.data.techno import (
    load_inflation,
    load_potentials,
    load_profiles,
    load_region_table,
)
from hazard_rate.energy.aggregation import aggregate_profile
from hazard_rate.energy.lcoh import demand_from_potential
from hazard_rate.energy.portfolio import CaseFailure
from hazard_rate.energy.technologies import technology_set
from hazard_rate.errors import ErrorCode, HazardRateError, InputError
from hazard_rate.models.energy import SystemCase
from hazard_rate.models.rates import (
    DiscountRateRecord,
    EconomicRateSeries,
    EconomicSource,
    RatingObservation,
)
from hazard_rate.rates.synthesis import build_discount_rates

logger = structlog.get_logger()

SCHEME_COLUMNS = {"final": "i_final", "economic": "i_economic", "hazard": "i_hazard"}


@dataclass
class CaseBatch:
    """System cases ready to solve plus the countries that could not be set up."""

    cases: list[SystemCase] = field(default_factory=list)
    failures: list[CaseFailure] = field(default_factory=list)


class Pipeline:
    """
    Runs the stages of one configured analysis.

    Example usage:
        pipeline = Pipeline(load_config())
        records = pipeline.discount_rates()
        batch = pipeline.build_cases({r.country.iso3: r.i_final for r in records})
    """

    def __init__(self, config: RunConfig, registry: CountryRegistry | None = None):
        self.config = config
        self.registry = registry or load_country_registry()
        self._observations: list[RatingObservation] | None = None

    def _path(self, name: str) -> Path:
        return self.config.data.path(name)

    def observations(self) -> list[RatingObservation]:
        """All economic observations of the three file-backed sources (parsed once)."""
        if self._observations is None:
            data = self.config.data
            grades = load_grade_table(self._path(data.grade_table))
            observations: list[RatingObservation] = []
            for source, name in (
                (EconomicSource.DAMODARAN, data.damodaran),
                (EconomicSource.WIKIRATING, data.wikirating),
                (EconomicSource.CREDENDO, data.credendo),
            ):
                observations.extend(
                    parse_economic_source(self._path(name), source, grades, self.registry)
                )
            self._observations = observations
        return self._observations

    def resolve(self) -> ResolvedRates:
        """Run both source cascades for every registered country."""
        rates = self.config.rates
        overrides_path = self._path(self.config.data.overrides)
        overrides = parse_overrides(overrides_path, self.registry) if overrides_path.exists() else []
        return resolve_rates(
            self.observations(),
            parse_hazard_source(self._path(self.config.data.wri), self.registry),
            overrides,
            registry=self.registry,
            hazard_year=rates.end_year,
            damodaran_years=(rates.end_year - rates.window + 1, rates.end_year),
        )

    def discount_rates(self) -> list[DiscountRateRecord]:
        """Final discount-rate records ordered by iso3."""
        rates = self.config.rates
        return build_discount_rates(
            self.resolve(),
            end_year=rates.end_year,
            window=rates.window,
            a=rates.blend_a,
            wri_denominator=rates.wri_denominator,
        )

    def damodaran_series(self) -> list[EconomicRateSeries]:
        """Every country's full Damodaran history, ordered by iso3."""
        samples: dict[str, dict[int, float]] = defaultdict(dict)
        countries = {}
        for obs in self.observations():
            if obs.source is EconomicSource.DAMODARAN and obs.year is not None:
                samples[obs.country.iso3][obs.year] = obs.rate
                countries[obs.country.iso3] = obs.country
        return [
            EconomicRateSeries(country=countries[iso3], samples=samples[iso3])
            for iso3 in sorted(samples)
        ]

    def build_cases(self, rates: dict[str, float], countries: list[str] | None = None) -> CaseBatch:
        """
        Assemble one SystemCase per requested country.

        Shared inputs (region costs, inflation, potentials) failing raise;
        a country-level problem such as a missing profile becomes a CaseFailure.

        Args:
            rates: iso3 -> discount rate
            countries: Codes to include (all keys of rates when None)

        Returns:
            CaseBatch ordered by iso3

        Raises:
            InputError: Shared inputs unreadable, UNKNOWN_COUNTRY in the request
        """
        data = self.config.data
        base_year = self.config.rates.base_year

        inflation_path = self._path(data.inflation)
        inflation = load_inflation(inflation_path) if inflation_path.exists() else {}
        regions = load_region_table(
            self._path(data.regions),
            self._path(data.country_regions) if data.country_regions else None,
            inflation=inflation,
            base_year=base_year,
            registry=self.registry,
        )
        potentials = load_potentials(self._path(data.potentials), self.registry)

        requested = sorted(
            {self.registry.normalize(c).iso3 for c in countries} if countries else set(rates)
        )
        batch = CaseBatch()
        for iso3 in requested:
            try:
                batch.cases.append(self._build_case(iso3, rates, regions, inflation, potentials))
            except HazardRateError as e:
                logger.warning("Country skipped", iso3=iso3, code=e.code.value)
                batch.failures.append(CaseFailure(iso3=iso3, code=e.code.value, message=str(e)))

        logger.info("Built system cases", cases=len(batch.cases), skipped=len(batch.failures))
        return batch

    def _build_case(self, iso3, rates, regions, inflation, potentials) -> SystemCase:
        model = self.config.model
        if iso3 not in rates:
            raise InputError(ErrorCode.UNRESOLVED_COUNTRY, f"{iso3}: no discount rate", iso3=iso3)
        if iso3 not in potentials:
            raise InputError(ErrorCode.MALFORMED_ROW, f"{iso3}: no production potential", iso3=iso3)

        profile_path = self._path(self.config.data.profiles_dir) / f"{iso3}.csv"
        wind, pv = load_profiles(profile_path)
        return SystemCase(
            country=self.registry.normalize(iso3),
            discount_rate=rates[iso3],
            wind=aggregate_profile(wind, model.resolution),
            pv=aggregate_profile(pv, model.resolution),
            annual_demand_kg=demand_from_potential(potentials[iso3], model.demand_share),
            technologies=technology_set(
                self.config.technologies, regions, iso3, inflation, self.config.rates.base_year
            ),
            lhv=model.lhv_kwh_per_kg,
        )

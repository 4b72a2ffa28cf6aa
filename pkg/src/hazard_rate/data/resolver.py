"""Ranked source cascade that assigns one economic series and one hazard score per country."""

from collections import Counter, defaultdict
from dataclasses import dataclass, replace

import structlog

from hazard_rate.data.registry import CountryRegistry, load_country_registry
from hazard_rate.errors import UnresolvedCountryError
from hazard_rate.models.rates import (
    ECONOMIC_CASCADE,
    EconomicRateSeries,
    EconomicSource,
    HazardScore,
    HazardSource,
    Override,
    RatingObservation,
    ResolvedHazard,
)

logger = structlog.get_logger()


@dataclass
class ResolvedRates:
    """Cascade output: every registered country has both entries."""

    economic: dict[str, EconomicRateSeries]
    hazard: dict[str, ResolvedHazard]

    def provenance(self) -> list[tuple[str, str, str, str, str]]:
        """(iso3, econ source, econ donor, hazard source, hazard donor) rows ordered by iso3."""
        return [
            (
                iso3,
                self.economic[iso3].source.value,
                self.economic[iso3].donor or "",
                self.hazard[iso3].source.value,
                self.hazard[iso3].donor or "",
            )
            for iso3 in sorted(self.economic)
        ]


def worst_damodaran_rate(observations: list[RatingObservation]) -> float | None:
    """Highest Damodaran rate in the latest year that has Damodaran data."""
    damodaran = [o for o in observations if o.source is EconomicSource.DAMODARAN and o.year is not None]
    if not damodaran:
        return None
    latest = max(o.year for o in damodaran)
    return max(o.rate for o in damodaran if o.year == latest)


class _Cascade:
    """Memoized per-country resolution with donor-cycle detection."""

    def __init__(
        self,
        registry: CountryRegistry,
        observations: list[RatingObservation],
        hazard_scores: list[HazardScore],
        overrides: list[Override],
        hazard_year: int | None,
    ):
        self.registry = registry
        self.by_source: dict[str, dict[EconomicSource, list[RatingObservation]]] = defaultdict(
            lambda: defaultdict(list)
        )
        for obs in observations:
            self.by_source[obs.country.iso3][obs.source].append(obs)

        self.wri: dict[str, HazardScore] = {}
        for score in sorted(hazard_scores, key=lambda s: (s.country.iso3, s.year)):
            if hazard_year is not None and score.year > hazard_year:
                continue
            # Sorted ascending, so the latest eligible year wins
            self.wri[score.country.iso3] = score
        self.hazard_fallback_year = max((s.year for s in self.wri.values()), default=0)

        self.economic_overrides = {o.country.iso3: o for o in overrides if o.applies_to_economic}
        self.hazard_overrides = {o.country.iso3: o for o in overrides if o.applies_to_hazard}
        self.worst = worst_damodaran_rate(observations)

        self.economic: dict[str, EconomicRateSeries | None] = {}
        self.hazard: dict[str, ResolvedHazard | None] = {}

    def resolve_economic(self, iso3: str, visiting: frozenset[str] = frozenset()) -> EconomicRateSeries | None:
        if iso3 in self.economic:
            return self.economic[iso3]
        if iso3 in visiting:
            return None

        country = self.registry.normalize(iso3)
        series: EconomicRateSeries | None = None
        sources = self.by_source.get(iso3, {})

        for source in ECONOMIC_CASCADE:
            found = sources.get(source)
            if not found:
                continue
            if source is EconomicSource.DAMODARAN:
                series = EconomicRateSeries(
                    country=country,
                    samples={o.year: o.rate for o in found},
                    source=source,
                )
            else:
                series = EconomicRateSeries(country=country, source=source, single_vintage=found[0].rate)
            break

        if series is None and iso3 in self.economic_overrides:
            override = self.economic_overrides[iso3]
            if override.donor is not None:
                donor = self.resolve_economic(override.donor, visiting | {iso3})
                if donor is not None:
                    series = replace(
                        donor,
                        country=country,
                        samples=dict(donor.samples),
                        source=EconomicSource.OVERRIDE,
                        donor=override.donor,
                    )
            elif override.worst:
                if self.worst is not None:
                    series = EconomicRateSeries(
                        country=country, source=EconomicSource.OVERRIDE, single_vintage=self.worst
                    )
            elif override.rate is not None:
                series = EconomicRateSeries(
                    country=country, source=EconomicSource.OVERRIDE, single_vintage=override.rate
                )

        self.economic[iso3] = series
        return series

    def resolve_hazard(self, iso3: str, visiting: frozenset[str] = frozenset()) -> ResolvedHazard | None:
        if iso3 in self.hazard:
            return self.hazard[iso3]
        if iso3 in visiting:
            return None

        country = self.registry.normalize(iso3)
        resolved: ResolvedHazard | None = None

        if iso3 in self.wri:
            resolved = ResolvedHazard(score=self.wri[iso3])
        elif iso3 in self.hazard_overrides:
            override = self.hazard_overrides[iso3]
            if override.donor is not None:
                donor = self.resolve_hazard(override.donor, visiting | {iso3})
                if donor is not None:
                    resolved = ResolvedHazard(
                        score=replace(donor.score, country=country, source=HazardSource.NEIGHBOR_OVERRIDE),
                        donor=override.donor,
                    )
            elif override.rate is not None:
                resolved = ResolvedHazard(
                    score=HazardScore(
                        country=country,
                        wri=override.rate,
                        year=self.hazard_fallback_year,
                        source=HazardSource.NEIGHBOR_OVERRIDE,
                    )
                )

        self.hazard[iso3] = resolved
        return resolved


def resolve_rates(
    observations: list[RatingObservation],
    hazard_scores: list[HazardScore],
    overrides: list[Override],
    registry: CountryRegistry | None = None,
    hazard_year: int | None = None,
    damodaran_years: tuple[int, int] | None = None,
) -> ResolvedRates:
    """
    Assign one economic series and one hazard score to every registered country.

    Economic cascade: DAMODARAN > WIKIRATING > CREDENDO > OVERRIDE.
    Hazard cascade: WRI (latest year, capped at hazard_year) > NEIGHBOR_OVERRIDE.
    Overrides only apply to countries no source covers; donors may
    themselves be override-resolved, cycles stay unresolved.

    Args:
        observations: Parsed economic observations of all sources
        hazard_scores: Parsed WRI scores
        overrides: Manual assignments
        registry: Country registry (packaged default if None)
        hazard_year: Ignore WRI editions after this year
        damodaran_years: Inclusive (first, last) years of Damodaran data to keep;
            countries with no Damodaran value inside fall through the cascade

    Returns:
        ResolvedRates keyed by iso3

    Raises:
        UnresolvedCountryError: Listing every country missing either entry
    """
    registry = registry or load_country_registry()
    if damodaran_years is not None:
        first, last = damodaran_years
        observations = [
            o for o in observations
            if o.source is not EconomicSource.DAMODARAN or (o.year is not None and first <= o.year <= last)
        ]
    cascade = _Cascade(registry, observations, hazard_scores, overrides, hazard_year)

    economic: dict[str, EconomicRateSeries] = {}
    hazard: dict[str, ResolvedHazard] = {}
    unresolved: list[str] = []

    for country in registry.countries:
        series = cascade.resolve_economic(country.iso3)
        score = cascade.resolve_hazard(country.iso3)
        if series is None or score is None:
            unresolved.append(country.iso3)
            continue
        economic[country.iso3] = series
        hazard[country.iso3] = score

    if unresolved:
        logger.error("Unresolved countries", count=len(unresolved), countries=",".join(unresolved))
        raise UnresolvedCountryError(unresolved)

    logger.info(
        "Resolved rate cascade",
        countries=len(economic),
        economic=dict(sorted(Counter(s.source.value for s in economic.values()).items())),
        hazard=dict(sorted(Counter(h.source.value for h in hazard.values()).items())),
    )
    return ResolvedRates(economic=economic, hazard=hazard)

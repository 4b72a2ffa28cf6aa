"""ISO 3166 country registry."""

from functools import lru_cache
from importlib import resources

import pandas as pd

from hazard_rate.errors import ErrorCode, InputError
from hazard_rate.models.rates import CountryCode


class CountryRegistry:
    """
    Canonical set of countries covered by the pipeline.

    Holds 254 entries: the ISO 3166 alpha-3 codes without Antarctica plus
    user-assigned X-codes for disputed territories. Lookups accept alpha-2
    or alpha-3 codes in any case.
    """

    def __init__(self, frame: pd.DataFrame):
        self._countries: dict[str, CountryCode] = {}
        self._alpha2: dict[str, str] = {}
        self._regions: dict[str, str] = {}

        for row in frame.itertuples(index=False):
            country = CountryCode(iso3=row.iso3, name=row.name)
            self._countries[row.iso3] = country
            self._regions[row.iso3] = row.region
            if row.iso2:
                self._alpha2[row.iso2] = row.iso3

    def __len__(self) -> int:
        return len(self._countries)

    def __iter__(self):
        return iter(self.countries)

    def __contains__(self, code: str) -> bool:
        return self.lookup(code) is not None

    @property
    def countries(self) -> list[CountryCode]:
        """All countries ordered by iso3."""
        return [self._countries[k] for k in sorted(self._countries)]

    @property
    def default_regions(self) -> dict[str, str]:
        """Default iso3 -> cost region assignment."""
        return dict(self._regions)

    def lookup(self, code: str) -> CountryCode | None:
        """Country for an alpha-2 or alpha-3 code, or None."""
        key = str(code).strip().upper()
        if len(key) == 2:
            key = self._alpha2.get(key, "")
        return self._countries.get(key)

    def normalize(self, code: str, **context) -> CountryCode:
        """
        Resolve a code to its canonical country.

        Args:
            code: alpha-2 or alpha-3 code
            context: Extra detail (path, row) attached to the error

        Returns:
            CountryCode

        Raises:
            InputError: UNKNOWN_COUNTRY when the code is not registered
        """
        country = self.lookup(code)
        if country is None:
            raise InputError(ErrorCode.UNKNOWN_COUNTRY, f"unknown country code {code!r}", given=code, **context)
        return country


@lru_cache(maxsize=1)
def load_country_registry() -> CountryRegistry:
    """Load the packaged registry (cached)."""
    source = resources.files("hazard_rate.data").joinpath("countries.csv")
    with source.open("r", encoding="utf-8") as f:
        # "NA" is Namibia's alpha-2 code, not a missing value
        frame = pd.read_csv(f, dtype=str, keep_default_na=False)
    return CountryRegistry(frame)

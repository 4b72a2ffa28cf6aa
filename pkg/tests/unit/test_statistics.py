"""Unit tests for cross-country statistics and range histograms."""

import os
from collections import defaultdict

import numpy as np
import pytest

from hazard_rate.analysis import all_yearly_stats, describe, percentile, range_histogram, yearly_stats
from hazard_rate.data.registry import load_country_registry
from hazard_rate.data.sources import parse_economic_source
from hazard_rate.errors import AnalysisError, ErrorCode
from hazard_rate.models.rates import EconomicRateSeries, EconomicSource

REGISTRY = load_country_registry()
CODES = [c.iso3 for c in REGISTRY.countries]


def series(iso3, samples=None, single=None):
    return EconomicRateSeries(
        country=REGISTRY.normalize(iso3),
        samples=samples or {},
        single_vintage=single,
        source=EconomicSource.DAMODARAN if single is None else EconomicSource.CREDENDO,
    )


def reference_quantile(values, q):
    """Sorted-interpolation reference for the inclusive convention."""
    ordered = sorted(values)
    position = (len(ordered) - 1) * q
    low = int(np.floor(position))
    high = min(low + 1, len(ordered) - 1)
    return ordered[low] + (ordered[high] - ordered[low]) * (position - low)


class TestPercentile:
    """Tests for percentile."""

    def test_empty_list(self):
        """Test percentile of empty list returns 0."""
        assert percentile([], 50) == 0.0

    def test_single_value(self):
        """Test percentile of single value returns that value."""
        assert percentile([0.08], 25) == 0.08

    def test_interpolation(self):
        """Test linear interpolation between ranks."""
        assert percentile([1.0, 2.0, 3.0, 4.0], 25) == pytest.approx(1.75)


class TestDescribe:
    """Tests for describe and yearly_stats."""

    def test_hand_quartiles(self):
        """Test values (1..5)/100."""
        stats = describe({c: v / 100 for c, v in zip(CODES, [1, 2, 3, 4, 5])}, 2024)
        assert stats.median == pytest.approx(0.03)
        assert stats.q1 == pytest.approx(0.02)
        assert stats.q3 == pytest.approx(0.04)
        assert stats.iqr == pytest.approx(0.02)
        assert stats.mean == pytest.approx(0.03)
        assert stats.std == pytest.approx(np.std([0.01, 0.02, 0.03, 0.04, 0.05], ddof=1))
        assert stats.outliers == []

    def test_identical_values(self):
        """Test a constant distribution has zero spread."""
        stats = describe({c: 0.08 for c in CODES[:6]}, 2024)
        assert stats.iqr == 0.0
        assert stats.std == pytest.approx(0.0)
        assert stats.mean == pytest.approx(stats.median)

    def test_outliers(self):
        """Test Tukey fences flag far values, ordered by iso3."""
        values = {c: 0.05 for c in CODES[:8]}
        values[CODES[5]] = 0.6
        values[CODES[2]] = 0.051
        stats = describe(values, 2020)
        assert [iso3 for iso3, _ in stats.outliers] == [CODES[2], CODES[5]]
        assert stats.max_val == 0.6

    def test_too_few_countries(self):
        """Test fewer than 4 countries raise INSUFFICIENT_DATA."""
        with pytest.raises(AnalysisError) as exc_info:
            describe({c: 0.1 for c in CODES[:3]}, 2024)
        assert exc_info.value.code == ErrorCode.INSUFFICIENT_DATA

    def test_matches_reference_quartiles(self):
        """Test quartiles against a brute-force reference on random vectors."""
        rng = np.random.default_rng(2024)
        for size in (4, 5, 17, 100, 254):
            for _ in range(20):
                values = rng.uniform(0, 0.3, size=size)
                stats = describe({c: float(v) for c, v in zip(CODES, values)}, 2024)
                assert stats.q1 == pytest.approx(reference_quantile(values, 0.25))
                assert stats.median == pytest.approx(reference_quantile(values, 0.5))
                assert stats.q3 == pytest.approx(reference_quantile(values, 0.75))
                assert stats.q1 <= stats.median <= stats.q3

    def test_matches_numpy_linear(self):
        """Test the convention equals numpy's default 'linear' method."""
        rng = np.random.default_rng(9)
        values = rng.uniform(0, 0.3, size=57)
        stats = describe({c: float(v) for c, v in zip(CODES, values)}, 2024)
        assert stats.q1 == pytest.approx(np.percentile(values, 25))
        assert stats.q3 == pytest.approx(np.percentile(values, 75))

    def test_yearly_stats_skips_single_vintage(self):
        """Test only dated samples of that year count."""
        data = [series(c, {2023: 0.01 * i, 2024: 0.02 * i}) for i, c in enumerate(CODES[:4], start=1)]
        data.append(series(CODES[4], single=0.5))
        stats = yearly_stats(data, 2024)
        assert stats.count == 4
        assert stats.max_val == pytest.approx(0.08)

    def test_all_yearly_stats(self):
        """Test years without 4 countries are skipped."""
        data = [series(c, {2023: 0.01 * i, 2024: 0.02 * i}) for i, c in enumerate(CODES[:4], start=1)]
        data.append(series(CODES[4], {2010: 0.1}))
        assert [s.year for s in all_yearly_stats(data)] == [2023, 2024]

    def test_row(self):
        """Test the CSV row joins outlier codes."""
        values = {c: 0.05 for c in CODES[:8]}
        values[CODES[5]] = 0.6
        row = describe(values, 2020).to_dict()
        assert row["outliers"] == CODES[5]
        assert row["year"] == 2020


class TestRangeHistogram:
    """Tests for range_histogram."""

    def test_ranges(self):
        """Test constant and two-point series."""
        result = range_histogram(
            [series("ARG", {2020: 0.05, 2021: 0.12}), series("DEU", {2020: 0.01, 2021: 0.01, 2022: 0.01})]
        )
        assert result.ranges["ARG"] == pytest.approx(0.07)
        assert result.ranges["DEU"] == 0.0

    def test_counts_only_multi_sample(self):
        """Test the counts cover countries with at least two samples."""
        data = [
            series("ARG", {2020: 0.05, 2021: 0.12}),
            series("BRA", {2020: 0.03, 2021: 0.035}),
            series("CHL", {2021: 0.02}),
            series("DEU", single=0.0046),
        ]
        result = range_histogram(data, bin_width=0.01)
        assert sum(result.counts) == 2
        assert set(result.ranges) == {"ARG", "BRA", "CHL", "DEU"}
        assert result.bin_edges[0] == 0.0
        assert result.bin_edges[-1] >= 0.07
        assert len(result.bin_edges) == len(result.counts) + 1

    def test_invalid_bin_width(self):
        """Test non-positive bin widths are rejected."""
        with pytest.raises(ValueError):
            range_histogram([series("ARG", {2020: 0.05})], bin_width=0.0)


@pytest.mark.skipif(
    not os.environ.get("HAZARDRATE_DAMODARAN_2024"),
    reason="set HAZARDRATE_DAMODARAN_2024 to a genuine Damodaran file",
)
class TestDamodaran2024:
    """Reproduction checks against the published Damodaran 2024 dataset."""

    def test_yearly_summary(self):
        """Test mean 0.104, median 0.082 and IQR 0.083 for 2024."""
        observations = parse_economic_source(os.environ["HAZARDRATE_DAMODARAN_2024"], EconomicSource.DAMODARAN)
        samples: dict[str, dict[int, float]] = defaultdict(dict)
        countries = {}
        for obs in observations:
            samples[obs.country.iso3][obs.year] = obs.rate
            countries[obs.country.iso3] = obs.country
        data = [EconomicRateSeries(country=countries[k], samples=v) for k, v in samples.items()]

        stats = yearly_stats(data, 2024)

        assert stats.mean == pytest.approx(0.104, abs=0.001)
        assert stats.median == pytest.approx(0.082, abs=0.001)
        assert stats.iqr == pytest.approx(0.083, abs=0.001)

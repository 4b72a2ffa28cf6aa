"""End-to-end tests of the command-line interface on the fixture dataset."""

import json

import pandas as pd
import pytest
import yaml
from click.testing import CliRunner

from hazard_rate.cli import cli
from tests.conftest import PROFILE_SHAPES, UNCOVERED_ISLAND, write_dataset


def read_output(path):
    return pd.read_csv(path, comment="#", dtype=str, keep_default_na=False)


@pytest.mark.integration
class TestCli:
    """CLI runs against a generated input set."""

    @pytest.fixture
    def env(self, tmp_path):
        """Config file, input root and output directory."""
        root = write_dataset(tmp_path / "inputs")
        out = tmp_path / "out"
        config = tmp_path / "settings.yaml"
        config.write_text(
            yaml.safe_dump(
                {
                    "data": {"data_dir": str(root)},
                    "output": {"out_dir": str(out)},
                    "parallel": {"jobs": 2},
                }
            )
        )
        return {"root": root, "out": out, "config": str(config)}

    def run(self, env, *args):
        return CliRunner().invoke(cli, ["--config", env["config"], *args])

    def test_version(self):
        """Test --version prints the package version."""
        result = CliRunner().invoke(cli, ["--version"])
        assert result.exit_code == 0
        assert "0.1.0" in result.output

    def test_rates(self, env):
        """Test discount_rates.csv covers all 254 countries in iso3 order."""
        result = self.run(env, "rates")
        assert result.exit_code == 0, result.output
        assert "Wrote 254 discount rates" in result.output

        path = env["out"] / "discount_rates.csv"
        assert path.read_text().startswith("# config_hash=")
        df = read_output(path)
        assert len(df) == 254
        assert list(df["iso3"]) == sorted(df["iso3"])
        assert set(df["econ_source"]) == {"DAMODARAN", "WIKIRATING", "CREDENDO", "OVERRIDE"}

    def test_rates_pure_economic(self, env):
        """Test a = 1 makes i_final equal i_economic."""
        result = self.run(env, "rates", "--blend-a", "1.0")
        assert result.exit_code == 0, result.output
        df = read_output(env["out"] / "discount_rates.csv")
        assert (df["i_final"] == df["i_economic"]).all()

    def test_rates_sweep(self, env):
        """Test the sweep file holds one row per country and weight."""
        result = self.run(env, "rates", "--sweep", "0,0.5,1")
        assert result.exit_code == 0, result.output
        df = read_output(env["out"] / "blend_sweep.csv")
        assert len(df) == 3 * 254

    def test_rates_byte_identical(self, env):
        """Test reruns with equal inputs write equal bytes."""
        assert self.run(env, "rates").exit_code == 0
        first = (env["out"] / "discount_rates.csv").read_bytes()
        assert self.run(env, "rates").exit_code == 0
        assert (env["out"] / "discount_rates.csv").read_bytes() == first

    def test_rates_unresolved(self, env):
        """Test a missing override exits 3 naming the country."""
        write_dataset(env["root"], skip_overrides=frozenset({UNCOVERED_ISLAND}))
        result = self.run(env, "rates")
        assert result.exit_code == 3
        assert UNCOVERED_ISLAND in result.output

    def test_rates_invalid_weight(self, env):
        """Test an out-of-range blend weight exits 2."""
        result = self.run(env, "rates", "--blend-a", "1.5")
        assert result.exit_code == 2

    def test_rates_unknown_country(self, env):
        """Test an unregistered code in a source file exits 2 without a traceback."""
        credendo = env["root"] / "credendo.csv"
        credendo.write_text(credendo.read_text() + "XYZ,3\n")
        result = self.run(env, "rates")
        assert result.exit_code == 2
        assert "UNKNOWN_COUNTRY" in result.output
        assert not isinstance(result.exception, TypeError)

    def test_lcoh_selected_countries(self, env):
        """Test --countries limits the output rows."""
        assert self.run(env, "rates").exit_code == 0
        result = self.run(env, "lcoh", "--countries", "QAT,SAU")
        assert result.exit_code == 0, result.output
        assert "Solved 2 of 2 countries" in result.output

        df = read_output(env["out"] / "lcoh.csv")
        assert list(df["iso3"]) == ["QAT", "SAU"]
        assert set(df["status"]) == {"ok"}
        assert all(float(v) > 0 for v in df["lcoh_usd_per_kg"])

    def test_lcoh_uniform_rate(self, env):
        """Test uniform mode needs no rates file."""
        result = self.run(env, "lcoh", "--uniform-rate", "0.08", "--countries", "QAT", "--filename", "uniform.csv")
        assert result.exit_code == 0, result.output
        df = read_output(env["out"] / "uniform.csv")
        assert list(df["discount_rate"]) == ["0.080000"]

    def test_lcoh_failures_reported(self, env):
        """Test per-country failures land in the status column without aborting."""
        result = self.run(env, "lcoh", "--uniform-rate", "0.08", "--countries", "QAT,ISL,FRA")
        assert result.exit_code == 0, result.output
        assert "Solved 1 of 3 countries (2 failed)" in result.output

        df = read_output(env["out"] / "lcoh.csv").set_index("iso3")
        assert df.loc["QAT", "status"] == "ok"
        assert df.loc["ISL", "status"] == "INFEASIBLE_INPUT"
        assert df.loc["FRA", "status"] == "MALFORMED_ROW"
        assert df.loc["ISL", "lcoh_usd_per_kg"] == ""

    def test_lcoh_unknown_country(self, env):
        """Test an unregistered --countries code exits 2."""
        result = self.run(env, "lcoh", "--uniform-rate", "0.08", "--countries", "QQQ")
        assert result.exit_code == 2
        assert "UNKNOWN_COUNTRY" in result.output

    @pytest.mark.parametrize("resolution", ["0h", "00h", "day"])
    def test_lcoh_invalid_resolution(self, env, resolution):
        """Test a malformed resolution is a config error before any solve."""
        result = self.run(env, "lcoh", "--uniform-rate", "0.08", "--countries", "QAT,SAU", "--resolution", resolution)
        assert result.exit_code == 2
        assert not (env["out"] / "lcoh.csv").exists()

    def test_lcoh_missing_rates_file(self, env):
        """Test a missing rates file exits 2."""
        result = self.run(env, "lcoh", "--countries", "QAT")
        assert result.exit_code == 2

    def test_compare_and_geojson(self, env, tmp_path):
        """Test uniform vs rate-specific comparison and the GeoJSON join."""
        assert self.run(env, "rates").exit_code == 0
        assert self.run(env, "lcoh", "--countries", "QAT,SAU,PHL").exit_code == 0
        assert self.run(
            env, "lcoh", "--uniform-rate", "0.08", "--countries", "QAT,SAU,PHL", "--filename", "uniform.csv"
        ).exit_code == 0

        boundaries = tmp_path / "world.geojson"
        boundaries.write_text(
            json.dumps(
                {
                    "type": "FeatureCollection",
                    "features": [
                        {"type": "Feature", "properties": {"ISO_A3": code}, "geometry": None}
                        for code in ("PHL", "QAT", "SAU", "DEU")
                    ],
                }
            )
        )
        out = env["out"]
        result = self.run(
            env,
            "compare",
            str(out / "uniform.csv"),
            str(out / "lcoh.csv"),
            "--geojson",
            str(boundaries),
            "--rates",
            str(out / "discount_rates.csv"),
        )
        assert result.exit_code == 0, result.output

        df = read_output(out / "comparison.csv")
        assert sorted(df["iso3"]) == ["PHL", "QAT", "SAU"]
        assert list(df.columns) == ["iso3", "lcoh_base", "lcoh_new", "delta", "rel"]

        joined = json.loads((out / "countries.geojson").read_text())
        assert len(joined["features"]) == 4
        props = {f["properties"]["ISO_A3"]: f["properties"] for f in joined["features"]}
        assert props["DEU"]["lcoh"] is None
        assert props["PHL"]["i_final"] is not None
        assert set(props["QAT"]) >= {"i_final", "lcoh", "rel_vs_uniform", "delta", "delta_map"}

    def test_compare_identical(self, env):
        """Test a file compared with itself gives zero differences."""
        assert self.run(env, "lcoh", "--uniform-rate", "0.08", "--countries", "QAT,SAU").exit_code == 0
        path = str(env["out"] / "lcoh.csv")
        result = self.run(env, "compare", path, path)
        assert result.exit_code == 0, result.output
        df = read_output(env["out"] / "comparison.csv")
        assert {float(v) for v in df["delta"]} == {0.0}
        assert {float(v) for v in df["rel"]} == {0.0}

    def test_compare_mismatch(self, env, tmp_path):
        """Test differing country sets exit 2."""
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        a.write_text("iso3,lcoh_usd_per_kg,status\nPHL,3.98,ok\nQAT,2.0,ok\n")
        b.write_text("iso3,lcoh_usd_per_kg,status\nPHL,7.83,ok\n")
        result = self.run(env, "compare", str(a), str(b))
        assert result.exit_code == 2

    def test_stats(self, env):
        """Test yearly statistics, ranges and window comparison files."""
        result = self.run(env, "stats")
        assert result.exit_code == 0, result.output
        out = env["out"]

        stats = read_output(out / "stats.csv")
        years = [int(y) for y in stats["year"]]
        assert years == [*range(2008, 2013), *range(2015, 2025)]

        ranges = read_output(out / "ranges.csv")
        histogram = read_output(out / "range_histogram.csv")
        multi = sum(int(n) >= 2 for n in ranges["samples"])
        assert sum(int(c) for c in histogram["count"]) == multi

        windows = read_output(out / "window_comparison.csv")
        assert [int(w) for w in windows["window"]] == [1, 3, 5, 10]

    def test_stats_thin_window_skipped(self, env):
        """Test a window with too few countries is left out instead of aborting."""
        codes = ("ARG", "BRA", "CHL", "COL", "ECU")
        rows = [f"{iso3},{y},0.0{i + 2}" for i, iso3 in enumerate(codes) for y in range(2020, 2024)]
        rows += ["ARG,2024,0.05", "BRA,2024,0.03"]
        (env["root"] / "damodaran.csv").write_text("\n".join(["iso3,year,rate", *rows]) + "\n")
        result = self.run(env, "stats")
        assert result.exit_code == 0, result.output

        windows = read_output(env["out"] / "window_comparison.csv")
        assert [int(w) for w in windows["window"]] == [3, 5, 10]
        assert (env["out"] / "stats.csv").exists()

    def test_economic_vs_hazard_scheme(self, env):
        """Test economic and hazard rate runs compare with the top hazard country rising most."""
        countries = ",".join(sorted(PROFILE_SHAPES))
        assert self.run(env, "rates").exit_code == 0
        for scheme in ("economic", "hazard"):
            result = self.run(env, "lcoh", "--scheme", scheme, "--countries", countries, "--filename", f"{scheme}.csv")
            assert result.exit_code == 0, result.output

        rates = read_output(env["out"] / "discount_rates.csv").set_index("iso3")
        for scheme, column in (("economic", "i_economic"), ("hazard", "i_hazard")):
            df = read_output(env["out"] / f"{scheme}.csv").set_index("iso3")
            assert df.loc["PHL", "discount_rate"] == rates.loc["PHL", column]

        out = env["out"]
        result = self.run(env, "compare", str(out / "economic.csv"), str(out / "hazard.csv"))
        assert result.exit_code == 0, result.output
        df = read_output(out / "comparison.csv")
        rel = {iso3: float(v) for iso3, v in zip(df["iso3"], df["rel"], strict=True)}
        assert max(rel, key=rel.get) == "PHL"
        assert rel["PHL"] > 0

    def test_full_run_byte_identical(self, env, tmp_path):
        """Test rates, lcoh, compare and the GeoJSON join repeat byte for byte."""
        boundaries = tmp_path / "world.geojson"
        boundaries.write_text(
            json.dumps(
                {
                    "type": "FeatureCollection",
                    "features": [
                        {"type": "Feature", "properties": {"iso_a3": code}, "geometry": None}
                        for code in ("SAU", "QAT", "PHL")
                    ],
                }
            )
        )
        out = env["out"]
        names = ["discount_rates.csv", "lcoh.csv", "uniform.csv", "comparison.csv", "countries.geojson"]

        def full_run():
            assert self.run(env, "rates").exit_code == 0
            assert self.run(env, "lcoh", "--countries", "QAT,SAU,PHL").exit_code == 0
            assert self.run(
                env, "lcoh", "--uniform-rate", "0.08", "--countries", "QAT,SAU,PHL", "--filename", "uniform.csv"
            ).exit_code == 0
            result = self.run(
                env, "compare", str(out / "uniform.csv"), str(out / "lcoh.csv"),
                "--geojson", str(boundaries), "--rates", str(out / "discount_rates.csv"),
            )
            assert result.exit_code == 0, result.output
            return {name: (out / name).read_bytes() for name in names}

        assert full_run() == full_run()

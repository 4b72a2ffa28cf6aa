"""Command-line interface for hazard-rate."""

import sys
from pathlib import Path
from typing import NoReturn

import click
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from hazard_rate import __version__
from hazard_rate.analysis.comparison import clip_annotation, compare_schemes
from hazard_rate.analysis.ranges import range_histogram
from hazard_rate.analysis.statistics import all_yearly_stats
from hazard_rate.config import RunConfig, load_config
from hazard_rate.energy.portfolio import PortfolioSolver
from hazard_rate.errors import ErrorCode, HazardRateError, InputError, UnresolvedCountryError
from hazard_rate.models.analysis import COMPARISON_COLUMNS, STATS_COLUMNS
from hazard_rate.models.energy import LCOH_COLUMNS
from hazard_rate.models.rates import DISCOUNT_RATE_COLUMNS, EconomicRateSeries
from hazard_rate.output.geojson import join_geojson, load_geojson, write_geojson
from hazard_rate.output.writers import load_lcoh_file, load_rates_file, write_csv
from hazard_rate.pipeline import SCHEME_COLUMNS, Pipeline
from hazard_rate.rates.blend import blend_sweep
from hazard_rate.rates.correlation import pearson_r
from hazard_rate.rates.synthesis import window_comparison
from hazard_rate.utils.logging import setup_logging

console = Console()
err_console = Console(stderr=True)

EXIT_INPUT_ERROR = 2
EXIT_UNRESOLVED = 3


def fail(error: HazardRateError) -> NoReturn:
    """Report an error and exit: 3 for unresolved countries, 2 otherwise."""
    if isinstance(error, UnresolvedCountryError):
        err_console.print(f"[red]{len(error.countries)} countries could not be resolved:[/red]")
        for iso3 in error.countries:
            err_console.print(f"  {iso3}")
        sys.exit(EXIT_UNRESOLVED)
    err_console.print(f"[red]Error:[/red] {escape(str(error))}")
    sys.exit(EXIT_INPUT_ERROR)


def apply_overrides(ctx: click.Context, **sections: dict) -> RunConfig:
    """Run configuration with CLI flag values laid over the file values."""
    config: RunConfig = ctx.obj["config"]
    try:
        return config.with_overrides(**sections)
    except HazardRateError as e:
        fail(e)


def parse_weights(value: str) -> list[float]:
    try:
        return [float(v) for v in value.split(",") if v.strip()]
    except ValueError:
        fail(InputError(ErrorCode.CONFIG_ERROR, f"--sweep expects comma-separated numbers, got {value!r}"))


@click.group()
@click.version_option(version=__version__)
@click.option("-v", "--verbose", is_flag=True, help="Enable verbose logging")
@click.option("--config", type=click.Path(exists=True), help="Path to config file")
@click.pass_context
def cli(ctx: click.Context, verbose: bool, config: str | None) -> None:
    """Hazard Rate - Country discount rates with natural-hazard risk, and their LCOH impact."""
    ctx.ensure_object(dict)

    try:
        settings = load_config(config)
    except HazardRateError as e:
        fail(e)
    ctx.obj["config"] = settings

    log_level = "DEBUG" if verbose else settings.logging.level
    setup_logging(log_level, settings.logging.json_output)


@cli.command()
@click.option("--window", type=int, default=None, help="Averaging window in years (default: from config)")
@click.option("--end-year", type=int, default=None, help="Last year of the window (default: from config)")
@click.option("--blend-a", type=float, default=None, help="Economic share a of the blend (default: 0.75)")
@click.option(
    "--wri-denominator",
    type=click.Choice(["observed", "100"]),
    default=None,
    help="Normalize WRI scores by the observed maximum or by 100",
)
@click.option("--sweep", type=str, default=None, help="Comma-separated blend weights to also tabulate")
@click.option("--out", type=click.Path(), default=None, help="Output directory (default: from config)")
@click.pass_context
def rates(
    ctx: click.Context,
    window: int | None,
    end_year: int | None,
    blend_a: float | None,
    wri_denominator: str | None,
    sweep: str | None,
    out: str | None,
) -> None:
    """Build discount_rates.csv for every country."""
    config = apply_overrides(
        ctx,
        rates={"window": window, "end_year": end_year, "blend_a": blend_a, "wri_denominator": wri_denominator},
        output={"out_dir": out},
    )
    weights = parse_weights(sweep) if sweep else None

    try:
        records = Pipeline(config).discount_rates()
        sweep_table = (
            blend_sweep({r.country.iso3: (r.i_economic, r.i_hazard) for r in records}, weights)
            if weights
            else None
        )
    except HazardRateError as e:
        fail(e)

    out_dir = Path(config.output.out_dir)
    config_hash = config.config_hash()
    decimals = config.output.float_decimals
    path = write_csv([r.to_dict() for r in records], DISCOUNT_RATE_COLUMNS, out_dir / "discount_rates.csv", config_hash, decimals)

    if sweep_table is not None:
        rows = [
            {"iso3": iso3, "a": a, "i_final": finals[iso3]}
            for a, finals in sweep_table.items()
            for iso3 in finals
        ]
        rows.sort(key=lambda row: (row["iso3"], row["a"]))
        write_csv(rows, ["iso3", "a", "i_final"], out_dir / "blend_sweep.csv", config_hash, decimals)

    top = sorted(records, key=lambda r: (-r.i_final, r.country.iso3))[: config.output.top_n]
    table = Table(title=f"Highest final discount rates (top {len(top)})")
    table.add_column("ISO3", style="cyan")
    table.add_column("Economic", justify="right")
    table.add_column("Hazard", justify="right")
    table.add_column("Final", justify="right", style="green")
    table.add_column("Sources")
    for r in top:
        table.add_row(
            r.country.iso3,
            f"{r.i_economic:.4f}",
            f"{r.i_hazard:.4f}",
            f"{r.i_final:.4f}",
            f"{r.econ_source.value}/{r.hazard_source.value}",
        )
    console.print(table)

    try:
        corr = pearson_r([r.i_economic for r in records], [r.i_hazard for r in records])
        console.print(f"Pearson r(economic, hazard) = {corr.r:.3f} (p = {corr.p_value:.3g}, n = {corr.n})")
    except HazardRateError as e:
        console.print(f"[yellow]Correlation skipped: {escape(str(e))}[/yellow]")

    console.print(f"Wrote {len(records)} discount rates to {path}")


@cli.command()
@click.option("--rates", "rates_file", type=click.Path(), default=None, help="discount_rates.csv (default: <out>/discount_rates.csv)")
@click.option("--uniform-rate", type=float, default=None, help="Apply one rate to every country, ignoring --rates")
@click.option(
    "--scheme",
    type=click.Choice(["final", "economic", "hazard"]),
    default=None,
    help="Discount-rate column to apply (default: final)",
)
@click.option("--countries", type=str, default=None, help="Comma-separated country codes")
@click.option("--resolution", type=str, default=None, help="'1h', '<k>h' or 'week' (default: from config)")
@click.option("--jobs", type=int, default=None, help="Concurrent solves (default: from config)")
@click.option("--out", type=click.Path(), default=None, help="Output directory (default: from config)")
@click.option("--filename", type=str, default="lcoh.csv", show_default=True, help="Output file name")
@click.pass_context
def lcoh(
    ctx: click.Context,
    rates_file: str | None,
    uniform_rate: float | None,
    scheme: str | None,
    countries: str | None,
    resolution: str | None,
    jobs: int | None,
    out: str | None,
    filename: str,
) -> None:
    """Solve the per-country supply system and write lcoh.csv."""
    config = apply_overrides(
        ctx,
        model={"resolution": resolution, "uniform_rate": uniform_rate, "scheme": scheme},
        parallel={"jobs": jobs},
        output={"out_dir": out},
    )
    out_dir = Path(config.output.out_dir)
    pipeline = Pipeline(config)
    requested = [c.strip() for c in countries.split(",") if c.strip()] if countries else None

    try:
        if uniform_rate is not None:
            console.print(f"[dim]Uniform discount rate {config.model.uniform_rate:.4f}[/dim]")
            rates_by_country = {c.iso3: config.model.uniform_rate for c in pipeline.registry.countries}
        else:
            path = Path(rates_file) if rates_file else out_dir / "discount_rates.csv"
            column = SCHEME_COLUMNS[config.model.scheme]
            rates_by_country = {iso3: row[column] for iso3, row in load_rates_file(path).items()}
        batch = pipeline.build_cases(rates_by_country, requested)
    except HazardRateError as e:
        fail(e)

    solved = PortfolioSolver(jobs=config.parallel.jobs).solve(batch.cases, show_progress=err_console.is_terminal)

    rows = [r.to_dict() for r in solved.results]
    for failure in batch.failures + solved.failures:
        rows.append({"iso3": failure.iso3, "discount_rate": rates_by_country.get(failure.iso3), "status": failure.code})
    rows.sort(key=lambda row: row["iso3"])

    path = write_csv(rows, LCOH_COLUMNS, out_dir / filename, config.config_hash(), config.output.float_decimals)
    failed = len(rows) - len(solved.results)
    console.print(f"Solved {len(solved.results)} of {len(rows)} countries ({failed} failed); wrote {path}")


@cli.command()
@click.argument("lcoh_a", type=click.Path(exists=True))
@click.argument("lcoh_b", type=click.Path(exists=True))
@click.option("--geojson", type=click.Path(exists=True), default=None, help="Boundary GeoJSON to join results onto")
@click.option("--rates", "rates_file", type=click.Path(exists=True), default=None, help="discount_rates.csv for the i_final property")
@click.option("--out", type=click.Path(), default=None, help="Output directory (default: from config)")
@click.option("--top", type=int, default=None, help="Rows in the printed table (default: from config)")
@click.pass_context
def compare(
    ctx: click.Context,
    lcoh_a: str,
    lcoh_b: str,
    geojson: str | None,
    rates_file: str | None,
    out: str | None,
    top: int | None,
) -> None:
    """Compare two lcoh.csv files (LCOH_A is the baseline) and write comparison.csv."""
    config = apply_overrides(ctx, output={"out_dir": out, "top_n": top})
    out_dir = Path(config.output.out_dir)
    config_hash = config.config_hash()

    try:
        records = compare_schemes(load_lcoh_file(lcoh_a), load_lcoh_file(lcoh_b))
        rates_by_country = load_rates_file(rates_file) if rates_file else {}
        boundaries = load_geojson(geojson) if geojson else None
    except HazardRateError as e:
        fail(e)

    path = write_csv([r.to_dict() for r in records], COMPARISON_COLUMNS, out_dir / "comparison.csv", config_hash, config.output.float_decimals)

    if boundaries is not None:
        properties = {
            r.iso3: {
                "i_final": rates_by_country.get(r.iso3, {}).get("i_final"),
                "lcoh": r.lcoh_b,
                "rel_vs_uniform": r.rel,
                "delta": r.delta,
                "delta_map": clip_annotation(r.delta),
            }
            for r in records
        }
        joined = join_geojson(boundaries, properties)
        geo_path = write_geojson(joined, out_dir / "countries.geojson", config_hash)
        console.print(f"Joined {len(joined['features'])} features into {geo_path}")

    shown = records[: config.output.top_n]
    table = Table(title=f"Largest relative LCOH increase (top {len(shown)})")
    table.add_column("ISO3", style="cyan")
    table.add_column("Baseline", justify="right")
    table.add_column("New", justify="right")
    table.add_column("Delta", justify="right")
    table.add_column("Rel", justify="right", style="green")
    for r in shown:
        table.add_row(r.iso3, f"{r.lcoh_a:.2f}", f"{r.lcoh_b:.2f}", f"{r.delta:+.2f}", f"{r.rel:+.1%}")
    console.print(table)
    console.print(f"Compared {len(records)} countries; wrote {path}")


@cli.command()
@click.option("--window", type=int, default=None, help="Window for range and window statistics (default: from config)")
@click.option("--end-year", type=int, default=None, help="Last year of the window (default: from config)")
@click.option("--bin-width", type=float, default=0.01, show_default=True, help="Range histogram bin width")
@click.option("--out", type=click.Path(), default=None, help="Output directory (default: from config)")
@click.pass_context
def stats(
    ctx: click.Context,
    window: int | None,
    end_year: int | None,
    bin_width: float,
    out: str | None,
) -> None:
    """Write yearly statistics, per-country ranges and window comparisons."""
    config = apply_overrides(ctx, rates={"window": window, "end_year": end_year}, output={"out_dir": out})
    out_dir = Path(config.output.out_dir)
    config_hash = config.config_hash()
    decimals = config.output.float_decimals
    end = config.rates.end_year
    first = end - config.rates.window + 1

    try:
        series = Pipeline(config).damodaran_series()
        yearly = all_yearly_stats(series)
        in_window = [
            EconomicRateSeries(country=s.country, samples={y: v for y, v in s.samples.items() if first <= y <= end})
            for s in series
        ]
        histogram = range_histogram(in_window, bin_width)
        windows = window_comparison(series, end)
    except HazardRateError as e:
        fail(e)

    write_csv([s.to_dict() for s in yearly], STATS_COLUMNS, out_dir / "stats.csv", config_hash, decimals)
    samples = {s.country.iso3: len(s.samples) for s in in_window}
    write_csv(
        [{"iso3": iso3, "range": value, "samples": samples[iso3]} for iso3, value in histogram.ranges.items()],
        ["iso3", "range", "samples"],
        out_dir / "ranges.csv",
        config_hash,
        decimals,
    )
    write_csv(
        [
            {"bin_start": histogram.bin_edges[i], "bin_end": histogram.bin_edges[i + 1], "count": count}
            for i, count in enumerate(histogram.counts)
        ],
        ["bin_start", "bin_end", "count"],
        out_dir / "range_histogram.csv",
        config_hash,
        decimals,
    )
    write_csv(
        [{"window": w, **s.to_dict()} for w, s in windows.items()],
        ["window", *STATS_COLUMNS],
        out_dir / "window_comparison.csv",
        config_hash,
        decimals,
    )

    table = Table(title="Damodaran rates per year")
    table.add_column("Year", style="cyan")
    table.add_column("N", justify="right")
    table.add_column("Mean", justify="right")
    table.add_column("Median", justify="right")
    table.add_column("IQR", justify="right")
    table.add_column("Outliers", justify="right")
    for s in yearly:
        table.add_row(str(s.year), str(s.count), f"{s.mean:.3f}", f"{s.median:.3f}", f"{s.iqr:.3f}", str(len(s.outliers)))
    console.print(table)
    console.print(f"Wrote statistics for {len(yearly)} years to {out_dir}")


def main() -> None:
    """Entry point for the CLI."""
    cli()


if __name__ == "__main__":
    main()

"""Deterministic CSV output and the readers for files we wrote."""

from pathlib import Path
from typing import Any

import pandas as pd
import structlog

from hazard_rate.data.sources import parse_float, read_table
from hazard_rate.errors import ErrorCode, InputError

logger = structlog.get_logger()

HASH_PREFIX = "# config_hash="
RATE_FILE_COLUMNS = ["iso3", "i_economic", "i_hazard", "i_final"]
LCOH_FILE_COLUMNS = ["iso3", "lcoh_usd_per_kg"]


def write_csv(
    rows: list[dict[str, Any]],
    columns: list[str],
    path: Path | str,
    config_hash: str,
    decimals: int = 6,
) -> Path:
    """
    Write rows as CSV behind a '# config_hash=...' provenance line.

    Floats use fixed-point notation with `decimals` places and lines end in
    '\\n', so identical inputs give byte-identical files.

    Args:
        rows: Records in output order
        columns: Column order
        path: Destination file (parent directories are created)
        config_hash: Run configuration hash
        decimals: Float precision

    Returns:
        The written path
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame = pd.DataFrame(rows, columns=columns)

    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(f"{HASH_PREFIX}{config_hash}\n")
        frame.to_csv(f, index=False, float_format=f"%.{decimals}f", lineterminator="\n")

    logger.info("Wrote CSV", path=str(path), rows=len(frame))
    return path


def read_config_hash(path: Path | str) -> str | None:
    """Config hash recorded on the first line of an output file, if any."""
    with open(path, encoding="utf-8") as f:
        first = f.readline().strip()
    return first[len(HASH_PREFIX):] if first.startswith(HASH_PREFIX) else None


def load_rates_file(path: Path | str) -> dict[str, dict[str, float]]:
    """
    Read a discount_rates.csv back.

    Returns:
        iso3 -> {"i_economic", "i_hazard", "i_final"}

    Raises:
        InputError: MALFORMED_ROW
    """
    path = Path(path)
    df = read_table(path, RATE_FILE_COLUMNS)
    rates: dict[str, dict[str, float]] = {}
    for row_number, row in enumerate(df.itertuples(index=False), start=1):
        rates[row.iso3] = {
            column: parse_float(getattr(row, column), column, path, row_number)
            for column in RATE_FILE_COLUMNS[1:]
        }
    return rates


def load_lcoh_file(path: Path | str) -> dict[str, float]:
    """
    Read an lcoh.csv back, keeping the countries that solved.

    Returns:
        iso3 -> LCOH in USD/kg
    """
    path = Path(path)
    df = read_table(path, LCOH_FILE_COLUMNS)
    has_status = "status" in df.columns
    lcoh: dict[str, float] = {}
    for row_number, row in enumerate(df.itertuples(index=False), start=1):
        if has_status and row.status != "ok":
            continue
        if not row.lcoh_usd_per_kg:
            raise InputError(
                ErrorCode.MALFORMED_ROW,
                f"{path.name} row {row_number}: empty lcoh for a solved country",
                path=str(path),
                row=row_number,
            )
        lcoh[row.iso3] = parse_float(row.lcoh_usd_per_kg, "lcoh_usd_per_kg", path, row_number)
    return lcoh

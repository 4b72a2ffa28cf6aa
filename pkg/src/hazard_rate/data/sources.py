"""Parsers for the rating source files."""

from pathlib import Path

import pandas as pd
import structlog

from hazard_rate.data.registry import CountryRegistry, load_country_registry
from hazard_rate.errors import ErrorCode, InputError
from hazard_rate.models.rates import (
    EconomicSource,
    GradeTable,
    HazardScore,
    HazardSource,
    Override,
    RatingObservation,
)

logger = structlog.get_logger()

CREDENDO_MIN = 1
CREDENDO_MAX = 7

SOURCE_COLUMNS: dict[EconomicSource, list[str]] = {
    EconomicSource.DAMODARAN: ["iso3", "year", "rate"],
    EconomicSource.WIKIRATING: ["iso3", "grade"],
    EconomicSource.CREDENDO: ["iso3", "score"],
}
WRI_COLUMNS = ["iso3", "year", "score"]
OVERRIDE_COLUMNS = ["iso3", "donor_iso3_or_rate"]
GRADE_COLUMNS = ["grade", "rate"]
WORST_KEYWORD = "WORST"
OVERRIDE_TARGETS = {"both", "economic", "hazard"}


def read_table(path: Path | str, columns: list[str]) -> pd.DataFrame:
    """
    Read a UTF-8 CSV with a header row, every cell as a string.

    Lines starting with '#' are ignored so output files can be read back.

    Args:
        path: CSV file
        columns: Columns that must be present

    Returns:
        DataFrame of stripped strings

    Raises:
        InputError: MALFORMED_ROW when the file is missing or columns are absent
    """
    path = Path(path)
    if not path.exists():
        raise InputError(ErrorCode.MALFORMED_ROW, f"file not found: {path}", path=str(path), row=0)

    try:
        df = pd.read_csv(path, dtype=str, keep_default_na=False, comment="#", encoding="utf-8")
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise InputError(ErrorCode.MALFORMED_ROW, f"unreadable CSV {path}: {e}", path=str(path), row=0) from e

    df.columns = [str(c).strip() for c in df.columns]
    missing = [c for c in columns if c not in df.columns]
    if missing:
        raise InputError(
            ErrorCode.MALFORMED_ROW,
            f"{path.name}: missing columns {missing}",
            path=str(path),
            row=0,
        )
    return df.apply(lambda col: col.str.strip())


def parse_float(value: str, field: str, path: Path, row: int) -> float:
    try:
        return float(value)
    except ValueError:
        raise InputError(
            ErrorCode.MALFORMED_ROW,
            f"{path.name} row {row}: {field} {value!r} is not a number",
            path=str(path),
            row=row,
        ) from None


def parse_int(value: str, field: str, path: Path, row: int) -> int:
    number = parse_float(value, field, path, row)
    if not number.is_integer():
        raise InputError(
            ErrorCode.MALFORMED_ROW,
            f"{path.name} row {row}: {field} {value!r} is not an integer",
            path=str(path),
            row=row,
        )
    return int(number)


def load_grade_table(path: Path | str) -> GradeTable:
    """
    Load the 21-step grade scale (grade,rate), best grade first.

    Args:
        path: CSV file

    Returns:
        GradeTable

    Raises:
        InputError: MALFORMED_ROW on bad numbers or an invalid table shape
    """
    path = Path(path)
    df = read_table(path, GRADE_COLUMNS)
    entries = tuple(
        (row.grade, parse_float(row.rate, "rate", path, i))
        for i, row in enumerate(df.itertuples(index=False), start=1)
    )
    try:
        return GradeTable(entries=entries)
    except ValueError as e:
        raise InputError(ErrorCode.MALFORMED_ROW, f"{path.name}: {e}", path=str(path), row=0) from e


def credendo_to_rate(score: int, table: GradeTable) -> float:
    """
    Map a Credendo score (1 best .. 7 worst) onto the 21-step scale.

    Score s lands on entry round((s - 1) * 20 / 6), rounding half up.

    Args:
        score: Integer score in 1..7
        table: Grade scale

    Returns:
        Rate of the selected grade entry

    Raises:
        InputError: OUT_OF_RANGE for scores outside 1..7
    """
    if isinstance(score, bool) or int(score) != score or not CREDENDO_MIN <= score <= CREDENDO_MAX:
        raise InputError(ErrorCode.OUT_OF_RANGE, f"Credendo score must be an integer in 1..7, got {score!r}")

    steps = GradeTable.SIZE - 1
    span = CREDENDO_MAX - CREDENDO_MIN
    # floor(x + 1/2) in integer arithmetic, x = (s - 1) * steps / span
    index = (2 * (int(score) - CREDENDO_MIN) * steps + span) // (2 * span)
    return table.rate_at(index)


def parse_economic_source(
    path: Path | str,
    source: EconomicSource,
    grade_table: GradeTable | None = None,
    registry: CountryRegistry | None = None,
) -> list[RatingObservation]:
    """
    Parse one economic rating file into observations on the common scale.

    Schemas:
        DAMODARAN  iso3,year,rate   (rate as a fraction)
        WIKIRATING iso3,grade       (grade label of the grade table)
        CREDENDO   iso3,score       (integer 1..7)

    Args:
        path: CSV file
        source: Which source the file holds
        grade_table: Required for WIKIRATING and CREDENDO
        registry: Country registry (packaged default if None)

    Returns:
        One observation per data row

    Raises:
        InputError: MALFORMED_ROW, UNKNOWN_COUNTRY, UNKNOWN_GRADE, OUT_OF_RANGE
    """
    if source not in SOURCE_COLUMNS:
        raise InputError(ErrorCode.CONFIG_ERROR, f"{source.value} is not a file-backed source")
    if source is not EconomicSource.DAMODARAN and grade_table is None:
        raise InputError(ErrorCode.CONFIG_ERROR, f"{source.value} needs a grade table")

    path = Path(path)
    registry = registry or load_country_registry()
    df = read_table(path, SOURCE_COLUMNS[source])

    observations: list[RatingObservation] = []
    seen: set[tuple[str, int | None]] = set()

    for row_number, row in enumerate(df.itertuples(index=False), start=1):
        where = {"path": str(path), "row": row_number}
        country = registry.normalize(row.iso3, **where)

        year: int | None = None
        if source is EconomicSource.DAMODARAN:
            year = parse_int(row.year, "year", path, row_number)
            raw: object = parse_float(row.rate, "rate", path, row_number)
            rate = float(raw)
            if not 0.0 <= rate <= 1.0:
                raise InputError(
                    ErrorCode.OUT_OF_RANGE,
                    f"{path.name} row {row_number}: rate {rate} outside [0, 1]",
                    **where,
                )
        elif source is EconomicSource.WIKIRATING:
            raw = row.grade
            found = grade_table.rate_for_grade(row.grade)
            if found is None:
                raise InputError(
                    ErrorCode.UNKNOWN_GRADE,
                    f"{path.name} row {row_number}: unknown grade {row.grade!r}",
                    **where,
                )
            rate = found
        else:
            raw = parse_int(row.score, "score", path, row_number)
            try:
                rate = credendo_to_rate(raw, grade_table)
            except InputError as e:
                raise InputError(e.code, f"{path.name} row {row_number}: {e}", **where) from e

        key = (country.iso3, year)
        if key in seen:
            raise InputError(
                ErrorCode.MALFORMED_ROW,
                f"{path.name} row {row_number}: duplicate entry for {country.iso3} {year or ''}".strip(),
                **where,
            )
        seen.add(key)

        observations.append(RatingObservation(country=country, source=source, year=year, raw=raw, rate=rate))

    logger.info("Parsed economic source", source=source.value, path=str(path), rows=len(observations))
    return observations


def parse_hazard_source(path: Path | str, registry: CountryRegistry | None = None) -> list[HazardScore]:
    """
    Parse World Risk Report scores (iso3,year,score).

    Raises:
        InputError: MALFORMED_ROW, UNKNOWN_COUNTRY, OUT_OF_RANGE
    """
    path = Path(path)
    registry = registry or load_country_registry()
    df = read_table(path, WRI_COLUMNS)

    scores: list[HazardScore] = []
    for row_number, row in enumerate(df.itertuples(index=False), start=1):
        where = {"path": str(path), "row": row_number}
        country = registry.normalize(row.iso3, **where)
        year = parse_int(row.year, "year", path, row_number)
        wri = parse_float(row.score, "score", path, row_number)
        if not 0.0 <= wri <= 100.0:
            raise InputError(
                ErrorCode.OUT_OF_RANGE,
                f"{path.name} row {row_number}: score {wri} outside [0, 100]",
                **where,
            )
        scores.append(HazardScore(country=country, wri=wri, year=year, source=HazardSource.WRI))

    logger.info("Parsed hazard source", path=str(path), rows=len(scores))
    return scores


def parse_overrides(path: Path | str, registry: CountryRegistry | None = None) -> list[Override]:
    """
    Parse manual assignments (iso3,donor_iso3_or_rate[,target]).

    The value is a donor country code, a literal number, or WORST for the
    worst Damodaran rate of the latest year. target is both (default),
    economic or hazard; a literal with target hazard is a WRI score.

    Raises:
        InputError: MALFORMED_ROW, UNKNOWN_COUNTRY, OUT_OF_RANGE
    """
    path = Path(path)
    registry = registry or load_country_registry()
    df = read_table(path, OVERRIDE_COLUMNS)
    has_target = "target" in df.columns

    overrides: list[Override] = []
    seen: set[tuple[str, str]] = set()
    for row_number, row in enumerate(df.itertuples(index=False), start=1):
        where = {"path": str(path), "row": row_number}
        country = registry.normalize(row.iso3, **where)
        value = row.donor_iso3_or_rate
        target = (row.target or "both").lower() if has_target else "both"
        if target not in OVERRIDE_TARGETS:
            raise InputError(
                ErrorCode.MALFORMED_ROW,
                f"{path.name} row {row_number}: target must be one of {sorted(OVERRIDE_TARGETS)}",
                **where,
            )

        if value.upper() == WORST_KEYWORD:
            if target == "hazard":
                raise InputError(
                    ErrorCode.MALFORMED_ROW,
                    f"{path.name} row {row_number}: WORST only applies to the economic cascade",
                    **where,
                )
            override = Override(country=country, worst=True, target=target)
        elif value.isalpha():
            donor = registry.normalize(value, **where)
            override = Override(country=country, donor=donor.iso3, target=target)
        else:
            number = parse_float(value, "donor_iso3_or_rate", path, row_number)
            upper = 100.0 if target == "hazard" else 1.0
            if not 0.0 <= number <= upper:
                raise InputError(
                    ErrorCode.OUT_OF_RANGE,
                    f"{path.name} row {row_number}: value {number} outside [0, {upper:g}]",
                    **where,
                )
            override = Override(country=country, rate=number, target=target)

        applies = {"economic": override.applies_to_economic, "hazard": override.applies_to_hazard}
        cascades = {(country.iso3, name) for name, used in applies.items() if used}
        if cascades & seen:
            raise InputError(
                ErrorCode.MALFORMED_ROW,
                f"{path.name} row {row_number}: duplicate override for {country.iso3} ({target})",
                **where,
            )
        seen |= cascades
        overrides.append(override)

    logger.info("Parsed overrides", path=str(path), rows=len(overrides))
    return overrides

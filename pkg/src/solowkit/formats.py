"""Readers for the delimited and key-value input files.

Series files::

    year,value_added,capital,employment
    1991,10000,40000,3200000

Input-output row files::

    compensation_of_employees,mixed_income,value_added
    30,20,100

Published share tables (also what ``decompose --format csv`` writes)::

    field,mean_rate,share
    output,3.67,100
    capital_contribution,0.35,9.54
    ...

Published growth tables have a ``year`` first column followed by any of
:data:`GROWTH_COLUMNS`; a row whose year is ``mean`` holds period means.

Plan targets are ``key = value`` lines; ``#`` starts a comment.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

from .decomposition import SHARE_FIELDS, ShareRow, ShareTable
from .errors import ParseError
from .plan import TARGET_FIELDS, PlanTargets
from .series import AnnualObservation, SectorSeries, validate_series
from .shares import InputOutputRow

SERIES_HEADER = ("year", "value_added", "capital", "employment")
IO_ROW_HEADER = ("compensation_of_employees", "mixed_income", "value_added")
SHARE_TABLE_HEADER = ("field", "mean_rate", "share")
GROWTH_COLUMNS = ("q_hat", "k_hat", "l_hat", "apk_hat", "apl_hat", "tfp_hat")
PARTIAL_FIELDS = ("capital_pp_growth", "labor_pp_growth")
PLAN_KEYS = ("plan_label", "period") + TARGET_FIELDS


def _rows(path: Path):
    """Yield ``(line_number, cells)`` for non-blank rows."""
    try:
        handle = open(path, newline="", encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot open file: {exc.strerror}", path=str(path)) from exc
    with handle:
        reader = csv.reader(handle)
        try:
            for cells in reader:
                if not cells or all(not c.strip() for c in cells):
                    continue
                yield reader.line_num, [c.strip() for c in cells]
        except (csv.Error, UnicodeDecodeError) as exc:
            raise ParseError(str(exc), line=reader.line_num, path=str(path)) from exc


def _number(text: str, what: str, line: int, path: Path) -> float:
    try:
        value = float(text)
    except ValueError:
        raise ParseError(f"{what}: {text!r} is not a number", line=line, path=str(path)) from None
    if not math.isfinite(value):
        raise ParseError(f"{what}: {text!r} is not finite", line=line, path=str(path))
    return value


def _expect_header(rows, expected: tuple[str, ...], path: Path) -> None:
    try:
        line, header = next(rows)
    except StopIteration:
        raise ParseError("empty file, expected header " + ",".join(expected), path=str(path)) from None
    if tuple(header) != expected:
        raise ParseError(
            f"header must be {','.join(expected)!r}, got {','.join(header)!r}",
            line=line,
            path=str(path),
        )


def parse_period(text: str) -> tuple[int, int]:
    """``"2006:2010"`` -> ``(2006, 2010)``."""
    parts = text.split(":")
    if len(parts) != 2:
        raise ValueError(f"period must look like START:END, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"period bounds must be integers, got {text!r}") from None


def read_series(path: str | Path, sector_label: str = "") -> SectorSeries:
    path = Path(path)
    rows = _rows(path)
    _expect_header(rows, SERIES_HEADER, path)
    observations = []
    for line, cells in rows:
        if len(cells) != len(SERIES_HEADER):
            raise ParseError(
                f"expected {len(SERIES_HEADER)} fields, got {len(cells)}", line=line, path=str(path)
            )
        try:
            year = int(cells[0])
        except ValueError:
            raise ParseError(f"year: {cells[0]!r} is not an integer", line=line, path=str(path)) from None
        va, cap, emp = (_number(c, n, line, path) for c, n in zip(cells[1:], SERIES_HEADER[1:]))
        observations.append(AnnualObservation(year, va, cap, emp))
    return validate_series(observations, sector_label or path.stem)


def read_io_row(path: str | Path) -> InputOutputRow:
    path = Path(path)
    rows = _rows(path)
    _expect_header(rows, IO_ROW_HEADER, path)
    data = list(rows)
    if len(data) != 1:
        raise ParseError(f"expected exactly one data row, got {len(data)}", path=str(path))
    line, cells = data[0]
    if len(cells) != len(IO_ROW_HEADER):
        raise ParseError(f"expected {len(IO_ROW_HEADER)} fields, got {len(cells)}", line=line, path=str(path))
    values = [_number(c, n, line, path) for c, n in zip(cells, IO_ROW_HEADER)]
    return InputOutputRow(*values)


def read_targets(path: str | Path) -> PlanTargets:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot open file: {exc.strerror}", path=str(path)) from exc
    values: dict[str, object] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise ParseError(f"expected 'key = value', got {raw.strip()!r}", line=number, path=str(path))
        if key not in PLAN_KEYS:
            raise ParseError(
                f"unknown key {key!r}; allowed: {', '.join(PLAN_KEYS)}", line=number, path=str(path)
            )
        if key in values:
            raise ParseError(f"duplicate key {key!r}", line=number, path=str(path))
        if key == "plan_label":
            values[key] = value
        elif key == "period":
            try:
                values[key] = parse_period(value)
            except ValueError as exc:
                raise ParseError(str(exc), line=number, path=str(path)) from None
        else:
            values[key] = _number(value, key, number, path)
    return PlanTargets(**values)


@dataclass
class PublishedShareTable:
    table: ShareTable
    partials: dict[str, float] = field(default_factory=dict)


@dataclass
class PublishedGrowthTable:
    columns: tuple[str, ...]
    rows: dict[int, dict[str, float]]
    means: dict[str, float] | None = None


def read_published(
    path: str | Path, period: tuple[int, int] = (0, 0)
) -> PublishedShareTable | PublishedGrowthTable:
    """Read a published table in either share-table or growth-table shape.

    Share tables carry no period of their own; ``period`` is attached so the
    table can be compared against one recomputed for the same span.
    """
    path = Path(path)
    rows = _rows(path)
    try:
        line, header = next(rows)
    except StopIteration:
        raise ParseError("empty file", path=str(path)) from None
    if tuple(header) == SHARE_TABLE_HEADER:
        return _read_share_table(rows, path, period)
    if header and header[0] == "year":
        return _read_growth_table(header, rows, path, line)
    raise ParseError(
        f"unrecognized header {','.join(header)!r}; expected "
        f"{','.join(SHARE_TABLE_HEADER)!r} or 'year,<columns>'",
        line=line,
        path=str(path),
    )


def _read_share_table(rows, path: Path, period) -> PublishedShareTable:
    table_rows: dict[str, ShareRow] = {}
    partials: dict[str, float] = {}
    for line, cells in rows:
        if len(cells) != 3:
            raise ParseError(f"expected 3 fields, got {len(cells)}", line=line, path=str(path))
        name, mean_text, share_text = cells
        if name in table_rows or name in partials:
            raise ParseError(f"duplicate field {name!r}", line=line, path=str(path))
        mean = _number(mean_text, f"{name} mean_rate", line, path)
        if name in PARTIAL_FIELDS:
            if share_text:
                raise ParseError(f"{name} takes no share value", line=line, path=str(path))
            partials[name] = mean
        elif name in SHARE_FIELDS:
            share = _number(share_text, f"{name} share", line, path) if share_text else None
            table_rows[name] = ShareRow(mean, share)
        else:
            raise ParseError(
                f"unknown field {name!r}; allowed: {', '.join(SHARE_FIELDS + PARTIAL_FIELDS)}",
                line=line,
                path=str(path),
            )
    missing = [f for f in SHARE_FIELDS if f not in table_rows]
    if missing:
        raise ParseError(f"missing fields {missing}", path=str(path))
    return PublishedShareTable(ShareTable(period, table_rows), partials)


def _read_growth_table(header, rows, path: Path, header_line: int) -> PublishedGrowthTable:
    columns = tuple(header[1:])
    unknown = [c for c in columns if c not in GROWTH_COLUMNS]
    if unknown or not columns or len(set(columns)) != len(columns):
        raise ParseError(
            f"growth-table columns must be distinct names from {', '.join(GROWTH_COLUMNS)}",
            line=header_line,
            path=str(path),
        )
    table: dict[int, dict[str, float]] = {}
    means = None
    for line, cells in rows:
        if len(cells) != len(header):
            raise ParseError(f"expected {len(header)} fields, got {len(cells)}", line=line, path=str(path))
        values = {c: _number(v, c, line, path) for c, v in zip(columns, cells[1:])}
        if cells[0] == "mean":
            if means is not None:
                raise ParseError("duplicate mean row", line=line, path=str(path))
            means = values
            continue
        try:
            year = int(cells[0])
        except ValueError:
            raise ParseError(f"year: {cells[0]!r} is not an integer", line=line, path=str(path)) from None
        if year in table:
            raise ParseError(f"duplicate year {year}", line=line, path=str(path))
        table[year] = values
    if not table:
        raise ParseError("growth table has no year rows", path=str(path))
    return PublishedGrowthTable(columns, table, means)

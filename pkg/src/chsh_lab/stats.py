"""Grouped descriptive statistics for CSV records.

Standard deviation is the sample (n - 1) one; a single-value group
reports 0. Even-sized groups take the midpoint of the two central values
as the median.
"""

from __future__ import annotations

import csv
import io
import math
import statistics
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, TextIO

from . import reference_data as ref
from .core import DomainError
from .report import Row, Table

STD_CONVENTION = "sample (n - 1)"


class SchemaError(ValueError):
    """Raised when a mapped column is missing from the CSV header."""


class RowError(ValueError):
    """Raised in strict mode for the first malformed data row."""


@dataclass(frozen=True)
class Record:
    group_keys: tuple[str, ...]
    value: float


@dataclass(frozen=True)
class Diagnostic:
    line: int
    message: str


@dataclass(frozen=True)
class IngestResult:
    records: list[Record]
    diagnostics: list[Diagnostic]


def ingest_csv(
    source: str | Path | TextIO,
    group_columns: Iterable[str],
    value_column: str,
    strict: bool = False,
) -> IngestResult:
    """Read records from a CSV file path or text stream.

    Rows whose value is missing or not a finite number are collected as
    diagnostics with their line number; in strict mode the first one
    raises :class:`RowError` instead.
    """
    group_columns = tuple(group_columns)
    if isinstance(source, (str, Path)):
        with open(source, newline="", encoding="utf-8") as fh:
            return ingest_csv(fh, group_columns, value_column, strict)

    reader = csv.reader(source)
    try:
        header = next(reader)
    except StopIteration:
        raise SchemaError("CSV input has no header row") from None
    header = [h.strip() for h in header]
    missing = [c for c in (*group_columns, value_column) if c not in header]
    if missing:
        raise SchemaError(f"missing column(s): {', '.join(missing)}")
    key_pos = [header.index(c) for c in group_columns]
    value_pos = header.index(value_column)

    records, diagnostics = [], []
    for fields in reader:
        line = reader.line_num
        if not fields or all(not f.strip() for f in fields):
            continue
        problem = None
        value = math.nan
        if len(fields) != len(header):
            problem = f"expected {len(header)} fields, got {len(fields)}"
        else:
            try:
                value = float(fields[value_pos])
            except ValueError:
                problem = f"non-numeric value {fields[value_pos]!r} in column {value_column!r}"
            else:
                if not math.isfinite(value):
                    problem = f"non-finite value {fields[value_pos]!r} in column {value_column!r}"
        if problem is not None:
            if strict:
                raise RowError(f"line {line}: {problem}")
            diagnostics.append(Diagnostic(line, problem))
            continue
        records.append(Record(tuple(fields[p].strip() for p in key_pos), value))
    return IngestResult(records, diagnostics)


def ingest_text(text: str, group_columns: Iterable[str], value_column: str, strict: bool = False) -> IngestResult:
    return ingest_csv(io.StringIO(text), group_columns, value_column, strict)


@dataclass(frozen=True)
class GroupSummary:
    keys: tuple[str, ...]
    n: int
    mean: float
    std_dev: float
    median: float


def summarize(values: list[float]) -> tuple[int, float, float, float]:
    n = len(values)
    mean = statistics.fmean(values)
    std = statistics.stdev(values) if n > 1 else 0.0
    return n, mean, std, statistics.median(values)


def group_summary(records: Iterable[Record], grouping: Iterable[int] | None = None) -> list[GroupSummary]:
    """Per-group count, mean, sample standard deviation and median.

    ``grouping`` selects positions within each record's keys; ``None`` uses
    all of them. Groups come back sorted by key.
    """
    groups: dict[tuple[str, ...], list[float]] = {}
    selector = None if grouping is None else tuple(grouping)
    for rec in records:
        key = rec.group_keys if selector is None else tuple(rec.group_keys[i] for i in selector)
        groups.setdefault(key, []).append(rec.value)
    if not groups:
        raise DomainError("no records to summarize")
    return [GroupSummary(key, *summarize(values)) for key, values in sorted(groups.items())]


@dataclass(frozen=True)
class ReferenceRow:
    age_group: str
    sex: str
    n: int
    mean: float
    std_dev: float
    median: float


def reference_table() -> list[ReferenceRow]:
    """The embedded completion-time summary, men first then women per age group."""
    rows = []
    for group, men, women in ref.COMPLETION_TIMES:
        rows.append(ReferenceRow(group, "men", *men))
        rows.append(ReferenceRow(group, "women", *women))
    return rows


def summary_table(summaries: list[GroupSummary], group_columns: Iterable[str]) -> Table:
    cols = tuple(group_columns)
    rows = [
        Row(
            id="/".join(s.keys),
            computed={"n": s.n, "mean": s.mean, "std_dev": s.std_dev, "median": s.median},
            info=dict(zip(cols, s.keys)),
        )
        for s in summaries
    ]
    return Table(
        id="group_summary",
        caption="Grouped summary of the input records",
        rows=rows,
        notes=[f"std_dev uses the {STD_CONVENTION} denominator; even-n median is the midpoint."],
    )


def reference_summary_table() -> Table:
    rows = [
        Row(
            id=f"{r.age_group}/{r.sex}",
            computed={"n": r.n, "mean": r.mean, "std_dev": r.std_dev, "median": r.median},
            info={"age_group": r.age_group, "sex": r.sex},
        )
        for r in reference_table()
    ]
    return Table(
        id="completion_time_reference",
        caption="Embedded published completion-time summary (display only)",
        rows=rows,
    )

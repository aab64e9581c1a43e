"""Report tables and their JSON / CSV / Markdown renderings.

A :class:`Table` is an ordered list of :class:`Row` objects. A row's
``computed`` is either a scalar or a mapping of column name to value;
``paper`` has the same shape and holds printed reference values where they
exist. Deltas are always ``computed - paper``.

Renderings are deterministic: field order follows insertion order, floats
are rounded to ``FLOAT_DIGITS`` decimals and negative zero is dropped.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Any, Mapping

SCHEMA_VERSION = "1"
FORMATS = ("json", "csv", "markdown")
FLOAT_DIGITS = 10


class UsageError(ValueError):
    """Raised for an unknown format, selector or similar caller mistake."""


@dataclass
class Row:
    id: str
    computed: Any
    paper: Any = None
    reference: dict[str, Any] | None = None
    info: dict[str, Any] = field(default_factory=dict)

    def delta(self) -> Any:
        return _delta(self.computed, self.paper)


@dataclass
class Table:
    id: str
    caption: str
    rows: list[Row] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)


def _delta(computed: Any, paper: Any) -> Any:
    if paper is None:
        return None
    if isinstance(paper, Mapping):
        out = {}
        for key, value in paper.items():
            d = _delta(computed.get(key) if isinstance(computed, Mapping) else None, value)
            if d is not None:
                out[key] = d
        return out or None
    if isinstance(computed, (int, float)) and isinstance(paper, (int, float)):
        return float(computed) - float(paper)
    return None


def clean_number(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            return None
        value = round(value, FLOAT_DIGITS)
        return value + 0.0
    if hasattr(value, "item"):  # numpy scalars
        return clean_number(value.item())
    if isinstance(value, Mapping):
        return {str(k): clean_number(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [clean_number(v) for v in value]
    return value


def _row_object(row: Row) -> dict[str, Any]:
    obj: dict[str, Any] = {"id": row.id}
    obj.update({k: clean_number(v) for k, v in row.info.items()})
    obj["computed"] = clean_number(row.computed)
    if row.paper is not None:
        obj["paper_value"] = clean_number(row.paper)
        obj["delta"] = clean_number(row.delta())
    if row.reference is not None:
        obj["reference"] = clean_number(row.reference)
    return obj


def to_json(tables: list[Table], n_states: int | None = None, metadata: dict[str, Any] | None = None) -> str:
    doc: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "grid": {"n_states": n_states},
        "metadata": clean_number(dict(metadata or {})),
        "tables": [
            {
                "id": t.id,
                "caption": t.caption,
                "notes": list(t.notes),
                "rows": [_row_object(r) for r in t.rows],
            }
            for t in tables
        ],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _flatten(prefix: str, value: Any, out: dict[str, Any]) -> None:
    if isinstance(value, Mapping):
        for key, sub in value.items():
            _flatten(f"{prefix}.{key}" if prefix else str(key), sub, out)
    elif isinstance(value, (list, tuple)):
        out[prefix] = ";".join("" if v is None else str(clean_number(v)) for v in value)
    else:
        out[prefix] = clean_number(value)


def _flat_row(row: Row) -> dict[str, Any]:
    flat: dict[str, Any] = {"id": row.id}
    for key, value in row.info.items():
        _flatten(key, value, flat)
    _flatten("computed", row.computed, flat)
    if row.paper is not None:
        _flatten("paper", row.paper, flat)
        _flatten("delta", row.delta(), flat)
    if row.reference is not None:
        _flatten("reference", row.reference, flat)
    return flat


def to_csv(table: Table) -> str:
    flat_rows = [_flat_row(r) for r in table.rows]
    columns: list[str] = ["id"]
    for flat in flat_rows:
        for key in flat:
            if key not in columns:
                columns.append(key)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    for flat in flat_rows:
        writer.writerow({k: "" if flat.get(k) is None else flat.get(k) for k in columns})
    return buf.getvalue()


def _md_value(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return f"{clean_number(round(value, 4)):.4f}"
    if isinstance(value, (list, tuple)):
        return ", ".join(_md_value(v) for v in value)
    if isinstance(value, Mapping):
        if "printed" in value:
            return str(value["printed"])
        return ", ".join(f"{k}={_md_value(v)}" for k, v in value.items())
    return str(value)


def _md_cell(computed: Any, paper: Any) -> str:
    text = _md_value(computed)
    if paper is not None and isinstance(computed, (int, float)) and isinstance(paper, (int, float)):
        delta = clean_number(round(float(computed) - float(paper), 4))
        text += f" (paper {_md_value(float(paper))}, delta {delta:+.4f})"
    return text


def to_markdown(tables: list[Table], n_states: int | None = None, metadata: dict[str, Any] | None = None) -> str:
    lines = [f"# CHSH lab report (schema {SCHEMA_VERSION})", ""]
    if n_states is not None:
        lines += [f"Grid: {n_states} polarization states", ""]
    for key, value in (metadata or {}).items():
        lines.append(f"- {key}: {_md_value(value)}")
    if metadata:
        lines.append("")
    for table in tables:
        lines += [f"## {table.caption}", ""]
        flat_keys: list[str] = []
        for row in table.rows:
            for key in row.info:
                if key not in flat_keys:
                    flat_keys.append(key)
        value_keys: list[str] = []
        scalar = False
        for row in table.rows:
            if isinstance(row.computed, Mapping):
                for key in row.computed:
                    if key not in value_keys:
                        value_keys.append(key)
            else:
                scalar = True
        header = ["id", *flat_keys, *value_keys] + (["value"] if scalar else []) + ["reference"]
        lines.append("| " + " | ".join(header) + " |")
        lines.append("|" + "---|" * len(header))
        for row in table.rows:
            cells = [row.id] + [_md_value(row.info.get(k)) for k in flat_keys]
            for key in value_keys:
                comp = row.computed.get(key) if isinstance(row.computed, Mapping) else None
                pap = row.paper.get(key) if isinstance(row.paper, Mapping) else None
                cells.append(_md_cell(comp, pap))
            if scalar:
                cells.append("" if isinstance(row.computed, Mapping) else _md_cell(row.computed, row.paper))
            ref = row.reference
            cells.append("" if not ref else "; ".join(f"{k}={_md_value(v)}" for k, v in ref.items()))
            lines.append("| " + " | ".join(cells) + " |")
        for note in table.notes:
            lines += ["", f"> {note}"]
        lines.append("")
    return "\n".join(lines)


def render_report(
    tables: list[Table],
    fmt: str = "json",
    n_states: int | None = None,
    metadata: dict[str, Any] | None = None,
) -> dict[str, str]:
    """Render ``tables`` and return ``{document name: text}``.

    JSON and Markdown produce a single document; CSV produces one document
    per table, named ``<table id>.csv``.
    """
    if fmt == "json":
        return {"report.json": to_json(tables, n_states, metadata)}
    if fmt == "markdown":
        return {"report.md": to_markdown(tables, n_states, metadata)}
    if fmt == "csv":
        return {f"{t.id}.csv": to_csv(t) for t in tables}
    raise UsageError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")

import csv
import io
import json

import pytest

from chsh_lab.report import SCHEMA_VERSION, Row, Table, UsageError, render_report


def sample_tables():
    return [
        Table(
            id="t1",
            caption="First",
            rows=[
                Row(id="r1", computed=1.0000000000001, paper=1.0, info={"theta": 22.5}),
                Row(id="r2", computed={"x": -0.0, "y": 2.5}, paper={"y": 2.4}),
            ],
            notes=["a note"],
        ),
        Table(id="t2", caption="Second", rows=[Row(id="only", computed=3, reference={"name": "X", "s": 2.0})]),
    ]


def test_empty_report_is_valid():
    doc = json.loads(render_report([], "json", n_states=32)["report.json"])
    assert doc["schema_version"] == SCHEMA_VERSION
    assert doc["tables"] == []
    empty = Table(id="e", caption="Empty")
    assert render_report([empty], "csv")["e.csv"] == "id\n"
    assert "## Empty" in render_report([empty], "markdown")["report.md"]


def test_json_structure():
    doc = json.loads(render_report(sample_tables(), "json", n_states=32)["report.json"])
    assert doc["grid"] == {"n_states": 32}
    r1, r2 = doc["tables"][0]["rows"]
    assert r1 == {"id": "r1", "theta": 22.5, "computed": 1.0, "paper_value": 1.0, "delta": 0.0}
    assert r2["computed"] == {"x": 0.0, "y": 2.5}
    assert r2["delta"] == {"y": pytest.approx(0.1)}
    assert doc["tables"][1]["rows"][0]["reference"] == {"name": "X", "s": 2.0}


def test_csv_one_file_per_table():
    docs = render_report(sample_tables(), "csv")
    assert list(docs) == ["t1.csv", "t2.csv"]
    text = docs["t1.csv"]
    assert "\r" not in text
    rows = list(csv.DictReader(io.StringIO(text)))
    assert rows[1]["computed.y"] == "2.5" and rows[1]["delta.y"] != ""
    assert rows[0]["computed"] == "1.0"


def test_deterministic():
    for fmt in ("json", "csv", "markdown"):
        assert render_report(sample_tables(), fmt) == render_report(sample_tables(), fmt)


def test_unknown_format():
    with pytest.raises(UsageError):
        render_report(sample_tables(), "xml")


def test_markdown_cell_shows_reference_and_delta():
    text = render_report(sample_tables(), "markdown")["report.md"]
    assert "2.5000 (paper 2.4000, delta +0.1000)" in text
    assert "> a note" in text

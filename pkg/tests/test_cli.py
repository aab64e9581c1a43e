import csv
import io
import json

import pytest

from chsh_lab.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows_of(out, table=0):
    return json.loads(out)["tables"][table]["rows"]


def test_tables_lambda_2(capsys):
    code, out, _ = invoke(capsys, "tables", "--lambda-index", "1")
    assert code == 0
    doc = json.loads(out)
    assert [t["id"] for t in doc["tables"]] == ["per_state_pp", "per_state_nn", "per_state_pn", "per_state_np", "per_state_e"]
    pp = doc["tables"][0]["rows"]
    assert pp[0]["computed"]["b1"] == pytest.approx(0.854, abs=5e-4)
    assert pp[0]["paper_value"]["b1"] == 0.854
    assert len(pp) == 32


def test_tables_out_of_range(capsys):
    code, _, err = invoke(capsys, "tables", "--lambda-index", "99")
    assert code == 2 and "lambda index" in err


def test_tables_small_grid(capsys):
    code, out, _ = invoke(capsys, "tables", "--lambda-index", "0", "--grid-size", "4")
    assert code == 0
    doc = json.loads(out)
    assert doc["grid"]["n_states"] == 4
    assert all(len(t["rows"]) == 4 and len(t["rows"][0]["computed"]) == 4 for t in doc["tables"])


def scan_bounds(out):
    rows = {r["id"]: r for r in rows_of(out)}
    return rows["s_min"]["computed"], rows["s_max"]["computed"], rows


def test_scan_theta(capsys):
    code, out, _ = invoke(capsys, "scan", "--theta", "11.25")
    lo, hi, rows = scan_bounds(out)
    assert (lo, hi) == pytest.approx((0.541, 1.848), abs=5e-4)
    assert code == 3 and rows["population_s"]["violates_bound"] is True


def test_scan_theta_90(capsys):
    code, out, _ = invoke(capsys, "scan", "--theta", "90")
    lo, hi, _ = scan_bounds(out)
    assert (lo, hi) == pytest.approx((-2.0, 0.0), abs=1e-9)
    assert code == 0


def test_scan_setting_constant(capsys):
    code, out, _ = invoke(capsys, "scan", "--setting", "0,22.5,45,67.5")
    per_state = [r["computed"] for r in rows_of(out) if r["id"].startswith("lambda")]
    assert len(per_state) == 32
    assert all(v == pytest.approx(1.4142, abs=5e-5) for v in per_state)
    assert code == 3


@pytest.mark.parametrize("argv", [["scan"], ["scan", "--theta", "1", "--setting", "0,1,2,3"], ["scan", "--setting", "0,1"]])
def test_scan_selector_errors(capsys, argv):
    assert invoke(capsys, *argv)[0] == 2


def test_suite(capsys):
    code, out, _ = invoke(capsys, "suite")
    rows = rows_of(out)
    assert code == 0 and len(rows) == 10
    assert all({"computed", "paper_value", "delta"} <= set(r) for r in rows)


def test_suite_all_csv_to_directory(capsys, tmp_path):
    code, _, _ = invoke(capsys, "suite", "--all", "--format", "csv", "--output", str(tmp_path / "out"))
    assert code == 0
    names = sorted(p.name for p in (tmp_path / "out").iterdir())
    assert "population_s.csv" in names and "per_state_s.csv" in names and "diffraction.csv" in names


def test_compare_and_breakdown(capsys):
    code, out, _ = invoke(capsys, "compare", "--theta", "22.5", "--format", "markdown")
    assert code == 0 and "2.697 ± 0.015" in out
    code, out, _ = invoke(capsys, "breakdown", "--format", "markdown")
    assert "0.670 -0.739 0.637 0.628 2.674" in out and "0.559 -0.591 0.560 0.820 2.530" in out


def test_compare_mc_echoes_seed(capsys):
    code, out, _ = invoke(capsys, "compare", "--theta", "22.5", "--mc-samples", "20000", "--seed", "5")
    doc = json.loads(out)
    assert doc["metadata"]["mc_seed"] == 5 and "PCG64" in doc["metadata"]["mc_algorithm"]
    row = doc["tables"][0]["rows"][0]["computed"]
    assert abs(row["mc_s"] - row["qm_s"]) < 4 * row["mc_s_std_error"]
    assert invoke(capsys, "compare", "--theta", "22.5", "--mc-samples", "20000", "--seed", "5")[1] == out


def test_diffract(capsys):
    code, out, _ = invoke(
        capsys, "diffract", "--d", "0.01mm", "--x", "2.0m", "--orders", "2", "--wavelengths", "485,565,750nm", "--format", "csv"
    )
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 6
    assert float(rows[5]["computed.y_cm"]) == pytest.approx(30.34, abs=0.02)
    assert invoke(capsys, "diffract", "--d", "0.01furlong")[0] == 2


def test_stats(capsys, tmp_path):
    path = tmp_path / "runs.csv"
    path.write_text("age_group,sex,minutes\n18-39,M,180\n18-39,M,200\n40-44,F,230\n40-44,F,x\n")
    code, out, err = invoke(capsys, "stats", "--input", str(path), "--group-by", "age_group,sex", "--value", "minutes")
    assert code == 0 and ":5:" in err
    doc = json.loads(out)
    summary, reference = doc["tables"]
    assert [r["id"] for r in summary["rows"]] == ["18-39/M", "40-44/F"]
    assert summary["rows"][0]["computed"]["mean"] == 190.0
    assert len(reference["rows"]) == 14
    assert doc["metadata"]["skipped_rows"] == 1
    strict = invoke(capsys, "stats", "--input", str(path), "--group-by", "age_group", "--value", "minutes", "--strict")
    assert strict[0] == 4


def test_stats_file_errors(capsys, tmp_path):
    assert invoke(capsys, "stats", "--input", str(tmp_path / "missing.csv"), "--group-by", "a", "--value", "v")[0] == 4
    path = tmp_path / "x.csv"
    path.write_text("a,b\n1,2\n")
    assert invoke(capsys, "stats", "--input", str(path), "--group-by", "a", "--value", "minutes")[0] == 4


def test_series(capsys):
    code, out, _ = invoke(capsys, "series", "--kind", "fig3")
    rows = rows_of(out)
    assert code == 0 and rows[0] == {"id": "pp[lambda1]", "x": 0.0, "computed": 1.0}
    assert invoke(capsys, "series", "--kind", "fig5")[0] == 2
    assert invoke(capsys, "series", "--kind", "fig2", "--b-indices", "40")[0] == 2


def test_unknown_format_and_env(capsys, monkeypatch):
    assert invoke(capsys, "suite", "--format", "xml")[0] == 2
    monkeypatch.setenv("CHSH_LAB_FORMAT", "markdown")
    code, out, _ = invoke(capsys, "suite")
    assert code == 0 and out.startswith("# CHSH lab report")
    code, out, _ = invoke(capsys, "suite", "--format", "json")
    assert json.loads(out)["schema_version"] == "1"
    monkeypatch.setenv("CHSH_LAB_FORMAT", "yaml")
    assert invoke(capsys, "suite")[0] == 2


def test_byte_identical_output(capsys, tmp_path):
    for fmt in ("json", "csv", "markdown"):
        a, b = tmp_path / f"a.{fmt}", tmp_path / f"b.{fmt}"
        assert run(["suite", "--format", fmt, "--output", str(a)]) == 0
        assert run(["suite", "--format", fmt, "--output", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()
        assert b"\r" not in a.read_bytes()


def test_default_grid_is_32(capsys):
    for argv in (["suite"], ["compare"], ["tables"]):
        assert json.loads(invoke(capsys, *argv)[1])["grid"]["n_states"] == 32

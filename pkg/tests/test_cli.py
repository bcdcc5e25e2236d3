import json
import math
import os
import subprocess
import sys

import pytest

from orthokit.cli import main


def run_cli(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def csv_rows(text):
    lines = [ln for ln in text.splitlines() if ln]
    header = lines[0].split(",")
    rows = [ln.split(",") for ln in lines[1:]]
    return header, rows


def test_bounds_json(capsys):
    rc, out, _ = run_cli(capsys, "bounds", "--comb", "3")
    assert rc == 0
    payload = json.loads(out)
    row = dict(zip(payload["columns"], payload["rows"][0]))
    assert row["ml_bound"] == pytest.approx(math.pi / 2, rel=1e-12)
    assert row["gamma_tilde"] == pytest.approx(2 * math.pi / 3, rel=1e-12)
    assert row["saturated"] is False
    assert row["period"] == pytest.approx(2 * math.pi, rel=1e-12)


def test_bounds_rejects_count_below_two(capsys):
    rc, _, err = run_cli(capsys, "bounds", "--comb", "1")
    assert rc == 2
    assert "count must be at least 2" in err


def test_bounds_requires_exactly_one_source(capsys):
    rc, _, _ = run_cli(capsys, "bounds")
    assert rc == 2
    rc, _, _ = run_cli(capsys, "bounds", "--comb", "3", "--bosons", "2")
    assert rc == 2


def test_bounds_domain_error_is_exit_one(capsys):
    rc, _, err = run_cli(capsys, "bounds", "--bosons", "2", "--g0", "1", "--g1", "1")
    assert rc == 1
    assert err.startswith("error:")


def test_trace_row_count(capsys):
    rc, out, _ = run_cli(
        capsys, "trace", "--comb", "5", "--dg", "1", "--quantity", "survival",
        "--points", "500",
    )
    assert rc == 0
    header, rows = csv_rows(out)
    assert header == ["gamma", "survival"]
    assert len(rows) == 500
    # weights sum to 1 within tolerance, not exactly, so survival(0) may
    # sit an ulp away from 1
    assert float(rows[0][1]) == pytest.approx(1.0, abs=1e-12)


def test_trace_zeros_on_aligned_grid(capsys):
    # 501 points over one period puts every multiple of gamma_tilde on-grid
    rc, out, _ = run_cli(capsys, "trace", "--comb", "5", "--points", "501")
    assert rc == 0
    _, rows = csv_rows(out)
    for k in (100, 200, 300, 400):
        assert float(rows[k][1]) < 1e-20
    assert float(rows[500][1]) == pytest.approx(1.0, abs=1e-12)


def test_trace_two_mode_source(capsys):
    rc, out, _ = run_cli(
        capsys, "trace", "--bosons", "4", "--g01", "0.3", "--stride", "2",
        "--count", "3", "--quantity", "relative_entropy", "--points", "61",
    )
    assert rc == 0
    header, rows = csv_rows(out)
    assert header == ["gamma", "relative_entropy"]
    assert len(rows) == 61
    assert float(rows[0][1]) == pytest.approx(0.0, abs=1e-12)
    # grid ends at one recurrence, where the state returns
    assert float(rows[-1][1]) == pytest.approx(0.0, abs=1e-10)


def test_figure_fig3(capsys):
    rc, out, _ = run_cli(capsys, "figure", "fig3", "--points", "11")
    assert rc == 0
    header, rows = csv_rows(out)
    assert header == ["gamma", "relative_entropy_2", "relative_entropy_3",
                      "relative_entropy_10"]
    assert len(rows) == 11
    assert all(abs(float(v)) < 1e-12 for v in rows[0][1:])


def test_figure_fig5(capsys):
    rc, out, _ = run_cli(capsys, "figure", "fig5", "--points", "12")
    assert rc == 0
    header, rows = csv_rows(out)
    assert header == ["count", "quotient", "g_ratio", "geometric_phase_s"]
    assert len(rows) == 11  # counts 2..12
    first = dict(zip(header, rows[0]))
    assert float(first["quotient"]) == pytest.approx(1.0, abs=1e-12)
    assert float(first["g_ratio"]) == pytest.approx(1.0, abs=1e-12)


def test_figure_fig6(capsys):
    rc, out, _ = run_cli(capsys, "figure", "fig6", "--points", "21")
    assert rc == 0
    header, rows = csv_rows(out)
    assert header[0] == "gamma_over_gamma_tilde"
    assert len(header) == 6 and len(rows) == 21
    # uncoupled trace stays at 1; all traces peak no higher than 2/sqrt(3)
    col0 = [float(r[1]) for r in rows]
    assert max(abs(v - 1.0) for v in col0) < 1e-12
    for j in range(2, 6):
        assert max(float(r[j]) for r in rows) <= 2 / math.sqrt(3) + 1e-9


def test_spectrum_csv(capsys):
    rc, out, _ = run_cli(
        capsys, "spectrum", "--bosons", "3", "--g0", "0.2", "--g1", "1.1",
        "--g01", "0.4",
    )
    assert rc == 0
    header, rows = csv_rows(out)
    assert header == ["index", "analytic", "numeric", "abs_error"]
    assert len(rows) == 4
    assert all(float(r[3]) < 1e-10 for r in rows)


def test_bifurcation_json(capsys):
    rc, out, _ = run_cli(capsys, "bifurcation")
    assert rc == 0
    payload = json.loads(out)
    row = dict(zip(payload["columns"], payload["rows"][0]))
    assert row["critical_ratio"] == pytest.approx(0.35355339059327373, abs=2e-3)
    assert row["peak_gamma_above_left"] < row["gamma_tilde_at_critical"]
    assert row["peak_gamma_above_right"] > row["gamma_tilde_at_critical"]


def test_extremal_json(capsys):
    rc, out, _ = run_cli(capsys, "extremal", "--bosons", "4", "--g01", "0.2")
    assert rc == 0
    payload = json.loads(out)
    rows = [dict(zip(payload["columns"], r)) for r in payload["rows"]]
    assert rows[0]["which"] == "fastest" and rows[0]["label"] == "ghz-type"
    assert rows[1]["which"] == "slowest" and rows[1]["label"] == "w-type"
    assert rows[0]["stride"] == 4 and rows[1]["stride"] == 1
    assert rows[0]["gamma_tilde"] * 4 == pytest.approx(rows[1]["gamma_tilde"], rel=1e-12)


def test_extremal_single_phase_only(capsys):
    rc, _, _ = run_cli(capsys, "extremal", "--bosons", "2", "--g01", "0.1",
                       "--phases", "0.1", "0.2")
    assert rc == 2


def test_out_file_written_atomically(tmp_path, capsys):
    target = tmp_path / "trace.csv"
    rc, out, _ = run_cli(
        capsys, "trace", "--comb", "3", "--points", "10", "--out", str(target)
    )
    assert rc == 0
    assert out == ""
    header, rows = csv_rows(target.read_text())
    assert header == ["gamma", "survival"] and len(rows) == 10
    leftovers = [p for p in os.listdir(tmp_path) if p != "trace.csv"]
    assert leftovers == []


def test_csv_uses_seventeen_significant_digits(capsys):
    rc, out, _ = run_cli(capsys, "trace", "--comb", "3", "--points", "7")
    assert rc == 0
    _, rows = csv_rows(out)
    # a full-precision double round-trips exactly
    assert float(rows[1][0]) == 2 * math.pi / 6


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "orthokit.cli", "bounds", "--comb", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert "gamma_tilde" in payload["columns"]

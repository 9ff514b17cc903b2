import subprocess
import sys

import pytest

from arcpath.cli import RunReport, main

CRUSH = """
nodes = [[0, 0.0, 0.0], [1, 1.0, 0.0]]
elements = [[0, 1, "bar"]]
supports = [[0, "ux", "uy", "uz"], [1, "uy", "uz"]]
loads = [[1, "ux", -1.0]]
monitors = [[1, "ux"]]

[solver]
dlambda = 0.1
max_steps = 200

[sections.bar]
type = "truss"
strain = "engineering"
A = 1.0
E = 1.0
"""


def test_run_lee_frame(tmp_path, capsys):
    out = tmp_path / "lee.csv"
    code = main(["run", "--model", "leeframe", "--steps", "50", "--dlambda", "0.5", "--out", str(out)])
    assert code == 0
    rows = out.read_text().splitlines()
    assert len(rows) == 51
    assert "steps 50" in capsys.readouterr().out


def test_run_writes_shapes_and_applies_overrides(tmp_path):
    shapes = tmp_path / "shapes"
    out = tmp_path / "p.csv"
    code = main(["run", "--model", "planartruss3_E1_2", "--steps", "5", "--dlambda", "0.01",
                 "--psi", "0.5", "--seedless", "--out", str(out), "--shapes", str(shapes)])
    assert code == 0
    assert sorted(p.name for p in shapes.iterdir()) == [f"shape_{i:04d}.csv" for i in range(1, 6)]
    first = out.read_text().splitlines()[1].split(",")
    assert float(first[1]) == 0.01


def test_missing_model_is_a_usage_error(capsys):
    assert main(["run"]) == 1
    assert "usage" in capsys.readouterr().err


def test_bad_inputs_exit_with_one(tmp_path):
    bad = tmp_path / "bad.toml"
    bad.write_text(CRUSH.replace('"bar"]]', '"rod"]]'))
    assert main(["run", "--model", str(bad), "--out", str(tmp_path / "x.csv")]) == 1
    bad.write_text("nodes = [")
    assert main(["run", "--model", str(bad), "--out", str(tmp_path / "x.csv")]) == 1
    assert main(["run", "--model", str(tmp_path / "nothing.toml")]) == 1
    assert main(["run", "--model", "leeframe", "--steps", "0"]) == 1
    assert not (tmp_path / "x.csv").exists()


def test_stall_exits_with_two_and_keeps_partial_path(tmp_path):
    model = tmp_path / "crush.toml"
    model.write_text(CRUSH)
    out = tmp_path / "crush.csv"
    assert main(["run", "--model", str(model), "--out", str(out)]) == 2
    rows = out.read_text().splitlines()
    assert 1 < len(rows) - 1 < 200


def test_bench_reports_first_step_arc_length(tmp_path, capsys):
    assert main(["bench", "--case", "spacetruss12", "--out-dir", str(tmp_path)]) == 0
    line = next(l for l in capsys.readouterr().out.splitlines() if l.startswith("spacetruss12"))
    assert line.split()[1] == "0.10636"
    assert (tmp_path / "spacetruss12.csv").exists()


def test_bench_group_runs_every_member(tmp_path):
    assert main(["bench", "--case", "planartruss3", "--out-dir", str(tmp_path)]) == 0
    assert len(list(tmp_path.glob("planartruss3_*.csv"))) == 4


def test_bench_unknown_case():
    assert main(["bench", "--case", "nosuch"]) == 1


def test_report_average():
    rep = RunReport(7, 22, 22 / 7, 1, 0.0)
    assert rep.average_iterations * rep.steps == pytest.approx(rep.total_iterations, abs=1e-12)
    assert "restarts 1" in rep.format()


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "arcpath", "bench", "--case", "nosuch"],
                          capture_output=True, text=True, cwd=tmp_path)
    assert proc.returncode == 1 and "unknown case" in proc.stderr

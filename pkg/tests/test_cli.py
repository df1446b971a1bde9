import json
import subprocess
import sys

import pytest

from curvelace.cli import main
from curvelace.emitters import parse_obj


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_pattern_disc_csv(capsys):
    code, out, _ = run(capsys, "pattern", "--surface", "disc", "--gauge", "0.5x0.5", "--rounds", "3",
                       "--format", "csv")
    assert code == 0
    assert out == "l,delta_N,N\n1,,6\n2,7,13\n3,6,19\ntotal,,38\n"


def test_pattern_table_column(capsys):
    code, out, _ = run(capsys, "pattern", "--surface", "enneper", "--n", "2", "--scale", "2.11",
                       "--gauge", "0.5x0.4", "--rounds", "18", "--format", "csv")
    assert code == 0
    rows = out.strip().splitlines()
    assert len(rows) == 20 and rows[-1] == "total,,1510"


def test_pattern_text_and_json(capsys, tmp_path):
    code, out, _ = run(capsys, "pattern", "--surface", "sphere", "--S", "2", "--gauge", "0.5x0.5")
    assert code == 0 and out.startswith("Pattern: sphere") and "Second half" in out
    path = tmp_path / "p.json"
    code, out, _ = run(capsys, "pattern", "--surface", "richmond", "--n", "1", "--gauge", "0.5x0.5",
                       "--format", "json", "--out", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["construction"] == "bidirectional-richmond"


@pytest.mark.parametrize("argv", [
    ["pattern", "--surface", "disc", "--gauge", "0x1", "--rounds", "3"],
    ["pattern", "--surface", "torus", "--gauge", "0.5x0.5"],
    ["pattern", "--surface", "disc", "--gauge", "0.5x0.5", "--rounds", "3", "--stop-radius", "1"],
    ["pattern", "--surface", "disc", "--n", "3", "--gauge", "0.5x0.5", "--rounds", "3"],
    ["pattern", "--surface", "enneper", "--gauge", "0.5x0.5"],
    ["pattern", "--gauge", "0.5x0.5"],
    ["mesh", "--surface", "hyperbolic"],
    ["mesh", "--surface", "disc", "--samples", "1x1"],
    ["knot", "--name", "5_2", "--tube-diameter", "0.8"],
    ["knot", "--name", "3_1", "--tube-diameter", "-1"],
    ["knot", "--name", "3_1"],
    [],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_knot(capsys):
    code, out, _ = run(capsys, "knot", "--name", "3_1", "--tube-diameter", "0.8")
    assert code == 0 and "13.10 cm minimum" in out
    code, out, _ = run(capsys, "knot", "--name", "4_1", "--tube-diameter", "0.8", "--recommended")
    assert code == 0 and "36.19 cm recommended" in out


def test_knot_table_flag_and_env(capsys, tmp_path, monkeypatch):
    path = tmp_path / "k.json"
    path.write_text(json.dumps([{"name": "4_1", "crossings": 4, "min_ropelength": 42.0}]))
    code, out, _ = run(capsys, "knot", "--name", "4_1", "--tube-diameter", "1", "--knot-table", str(path))
    assert code == 0 and "21.00 cm minimum" in out
    monkeypatch.setenv("CURVELACE_KNOT_TABLE", str(path))
    code, out, _ = run(capsys, "knot", "--name", "4_1", "--tube-diameter", "2")
    assert code == 0 and "42.00 cm minimum" in out


def test_mesh(capsys, tmp_path):
    path = tmp_path / "bour.obj"
    code, out, _ = run(capsys, "mesh", "--surface", "bour", "--r-max", "1", "--samples", "20x40",
                       "--out", str(path))
    assert code == 0 and out == ""
    verts, faces = parse_obj(path.read_text())
    assert len(verts) == 800 and faces.max() <= 800
    code, out, _ = run(capsys, "mesh", "--surface", "enneper", "--r-max", "1.5", "--samples", "4x8")
    verts, _ = parse_obj(out)
    assert abs(verts[:, 2]).max() == pytest.approx(1.5**2, abs=1e-6)


def test_config_merge(capsys, tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"surface": "disc", "gauge": "0.5x0.5", "rounds": 5, "format": "csv"}))
    code, out, _ = run(capsys, "pattern", "--config", str(cfg), "--rounds", "3")
    assert code == 0 and out.endswith("total,,38\n")
    cfg.write_text(json.dumps({"surfaces": "disc"}))
    code, _, err = run(capsys, "pattern", "--config", str(cfg))
    assert code == 2 and "unknown config key" in err


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "knots", "--suite", "isometry")
    assert code == 0
    assert out.splitlines()[-1] == "4/4 checks passed"


def test_verify_failure_exit_1(capsys, monkeypatch):
    from curvelace import cli, verification

    monkeypatch.setattr(cli, "run_all", lambda names=None: [verification.Check("x", "y", False, "forced")])
    code, out, _ = run(capsys, "verify")
    assert code == 1 and "[FAIL]" in out


def test_subprocess_entry_point_deterministic():
    argv = [sys.executable, "-m", "curvelace", "pattern", "--surface", "moebius", "--half-width", "0.4",
            "--scale", "4", "--gauge", "0.5x0.5"]
    a = subprocess.run(argv, capture_output=True, check=True)
    b = subprocess.run(argv, capture_output=True, check=True)
    assert a.stdout == b.stdout and b"\xc3\x97" in a.stdout  # UTF-8 multiplication sign

import json
import subprocess
import sys

import pytest

from conftest import FIXTURES, W_SHAPE
from terrainguard.cli import main


@pytest.fixture
def w_file(tmp_path):
    p = tmp_path / "w.json"
    p.write_text(json.dumps({"vertices": W_SHAPE}))
    return str(p)


def run(argv, capsys):
    rc = main(argv)
    return rc, capsys.readouterr()


def test_gen_deterministic(capsys):
    rc, a = run(["gen", "--n", "5", "--seed", "42"], capsys)
    assert rc == 0
    assert json.loads(a.out) == {"vertices": [[0, 1], [1, 0], [2, 4], [3, 3], [4, 3]]}
    _, b = run(["gen", "--n", "5", "--seed", "42"], capsys)
    assert a.out == b.out


def test_discretize(w_file, capsys):
    rc, out = run(["discretize", "--in", w_file], capsys)
    doc = json.loads(out.out)
    assert rc == 0
    assert [(b["x"], b["y"]) for b in doc["boundary_points"]] == [("4/5", "2/5"), ("16/5", "2/5")]
    assert len(doc["witnesses"]["points"]) == 6


def test_solve(w_file, tmp_path, capsys):
    out = tmp_path / "r.json"
    rc, _ = run(["solve", "--in", w_file, "--out", str(out), "--emit-extremes"], capsys)
    doc = json.loads(out.read_text())
    assert rc == 0
    assert doc["guards"] == [0, 2, 4] and doc["size"] == 3
    assert doc["provenance"] == {"0": "forced", "2": "right-pass", "4": "forced"}
    assert doc["verification"] == "covered"
    assert "extremes" in doc
    assert doc["counters"]["visit_bound"] == 2 * 6 + 5


def test_verify_codes(w_file, capsys):
    rc, out = run(["verify", "--in", w_file, "--guards", "0,2,4"], capsys)
    assert rc == 0 and json.loads(out.out)["verdict"] == "covered"
    rc, out = run(["verify", "--in", w_file, "--guards", "0,4"], capsys)
    assert rc == 1 and json.loads(out.out)["verdict"] == "uncovered"
    assert run(["verify", "--in", w_file, "--guards", "0,9"], capsys)[0] == 2


def test_oracle(w_file, capsys):
    rc, out = run(["oracle", "--in", w_file, "--continuous"], capsys)
    assert rc == 0 and json.loads(out.out)["size"] == 3
    assert run(["oracle", "--in", w_file, "--max-n", "3"], capsys)[0] == 2


def test_render(w_file, capsys):
    rc, out = run(["render", "--in", w_file, "--solve", "--boundary", "--show-witnesses"], capsys)
    assert rc == 0
    assert out.out.count('class="guard"') == 3 and out.out.count('class="boundary"') == 2


def test_campaign(tmp_path, capsys):
    csv_path = tmp_path / "c.csv"
    rc, out = run(["campaign", "--count", "5", "--seed", "1", "--csv", str(csv_path)], capsys)
    doc = json.loads(out.out)
    assert rc == 0 and doc["feasible"] == 5 and "instances" not in doc
    assert len(csv_path.read_text().splitlines()) == 6


@pytest.mark.parametrize("argv", [
    [],
    ["solve"],
    ["gen", "--n", "x"],
    ["verify", "--in", "missing.json", "--guards", "0"],
])
def test_usage_errors(argv, capsys):
    try:
        rc = main(argv)
    except SystemExit as e:
        rc = e.code
    assert rc == 2


def test_bad_terrain_file(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"vertices": [[0, 0], [0, 1]]}))
    assert main(["solve", "--in", str(p)]) == 2


def test_vertex_only_gap_via_subprocess():
    f = str(FIXTURES / "vertex_only_gap.json")
    r = subprocess.run([sys.executable, "-m", "terrainguard.cli", "verify", "--in", f,
                        "--guards", "0,1,3,4"], capture_output=True, text=True)
    assert r.returncode == 1
    r = subprocess.run([sys.executable, "-m", "terrainguard.cli", "solve", "--in", f],
                       capture_output=True, text=True)
    assert r.returncode == 0

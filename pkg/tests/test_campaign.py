import json

from terrainguard import parse_terrain, sees, vertex_point
from terrainguard.campaign import campaign, shrink, write_csv


def test_single_edge():
    s = campaign(1, n_range=(2, 2), seed=3)
    (inst,) = s["instances"]
    assert inst["size"] == inst["oracle_size"] == 2
    assert s["oracle_equal"] == 1 and not s["counterexamples"]


def test_seed_seven():
    s = campaign(100, n_range=(3, 10), seed=7)
    assert s["feasible"] == 100
    assert s["oracle_compared"] == s["oracle_equal"] == 100
    assert s["max_extremes_ratio"] <= 2 and s["max_visit_ratio"] <= 1
    assert s["counterexamples"] == []


def test_modes_agree():
    s = campaign(50, n_range=(3, 20), seed=8, compare_modes=True, max_n=0,
                 profiles=("uniform", "spiky", "staircase"))
    assert s["modes_compared"] == s["modes_equal"] == 50
    assert s["oracle_compared"] == 0


def test_reproducible(tmp_path):
    a = campaign(20, seed=5, profiles=("spiky",))
    b = campaign(20, seed=5, profiles=("spiky",), jobs=2)
    a.pop("elapsed"), b.pop("elapsed")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    write_csv(a, tmp_path / "out.csv")
    lines = (tmp_path / "out.csv").read_text().splitlines()
    assert len(lines) == 21 and lines[0].startswith("index,n,seed")


def test_shrink_keeps_failure():
    # failure: some vertex pair cannot see each other
    def blocked(t):
        return any(not sees(t, vertex_point(t, i), vertex_point(t, j))
                   for i in range(t.n) for j in range(t.n))

    t = parse_terrain([(0, 0), (1, 1), (2, 0), (3, 1), (4, 3), (5, 2), (6, 5)])
    small = shrink(t, blocked)
    assert blocked(small) and small.n == 3
    assert shrink(t, lambda c: False) == t

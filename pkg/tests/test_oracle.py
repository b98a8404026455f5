import json
from fractions import Fraction as F

import pytest

from conftest import FIXTURES, random_terrains
from oracles import sees_xy
from terrainguard import (OracleLimitError, brute_force_optimal, build_witness_set,
                          minimal_one_sided_oracle, parse_terrain, point_on_edge, sees, solve,
                          verify_two_sided_continuous, verify_vertices, vertex_point)
from terrainguard.gen import GenSpec, gen_terrain


def test_verify_valley(valley):
    cert = verify_two_sided_continuous(valley, [0, 2])
    assert cert.covered and cert.verdict == "covered"
    assert cert.vertices[0] == (0, 0, 2)
    assert all((a, b) == (0, 2) for _, _, _, a, b in cert.segments)


def test_verify_w_endpoints_uncovered(w_shape):
    cert = verify_two_sided_continuous(w_shape, [0, 4])
    assert cert.verdict == "uncovered"
    p = cert.failing_point
    assert not p.is_vertex and "right" in cert.reason
    # the reported point, and (3/2, 1/2) on edge 1, have no right guard among {v_1, v_5}
    assert not sees_xy(w_shape.vertices, w_shape.vertices[4], (p.x, p.y))
    assert sees_xy(w_shape.vertices, w_shape.vertices[0], (F(3, 2), F(1, 2)))
    assert not sees_xy(w_shape.vertices, w_shape.vertices[4], (F(3, 2), F(1, 2)))
    assert not verify_two_sided_continuous(w_shape, [0, 1, 4]).covered


def test_verify_w_three_guards(w_shape):
    cert = verify_two_sided_continuous(w_shape, [0, 2, 4], stop_early=False)
    assert cert.covered
    assert {k for k, *_ in cert.segments} == {0, 1, 2, 3}


def test_verify_rejects_empty(valley):
    with pytest.raises(ValueError):
        verify_two_sided_continuous(valley, [])


def test_distinct_guards_rule():
    # a single edge: each endpoint needs the other as its opposite-side guard
    t = parse_terrain([(0, 0), (1, 1)])
    assert verify_two_sided_continuous(t, [0, 1]).covered
    assert not verify_two_sided_continuous(t, [0]).covered
    assert not verify_vertices(t, [1])


def test_certificate_guards_satisfy_definition():
    for t in random_terrains(30, 3, 10, seed=31):
        gs = solve(t, verify=False).guard_set.guards
        cert = verify_two_sided_continuous(t, gs, stop_early=False)
        assert cert.covered
        for k, lo, hi, a, b in cert.segments:
            p = point_on_edge(t, k, (lo + hi) / 2)
            assert a != b and a <= k < b
            assert sees(t, vertex_point(t, a), p) and sees(t, vertex_point(t, b), p)


def test_edge_guards_see_far_endpoint():
    # a left guard of a point on e_k sees v_{k+1}; a right guard sees v_k
    for t in random_terrains(40, 3, 12, seed=32):
        cert = verify_two_sided_continuous(t, range(t.n), stop_early=False)
        for k, _, _, a, b in cert.segments:
            assert sees(t, vertex_point(t, a), vertex_point(t, k + 1))
            assert sees(t, vertex_point(t, b), vertex_point(t, k))


def test_failing_points_reproduce():
    for t in random_terrains(40, 4, 12, seed=33):
        cert = verify_two_sided_continuous(t, [0, t.n - 1])
        if cert.covered:
            continue
        p = cert.failing_point
        seen = [g for g in (0, t.n - 1) if sees(t, vertex_point(t, g), p)]
        # both endpoints seeing p would two-sided guard it
        assert seen != [0, t.n - 1]


def test_monotonicity():
    import random
    rng = random.Random(34)
    for t in random_terrains(40, 3, 10, seed=34):
        base = sorted({0, t.n - 1, *rng.sample(range(t.n), rng.randint(0, t.n - 1))})
        if verify_two_sided_continuous(t, base).covered:
            for extra in range(t.n):
                assert verify_two_sided_continuous(t, base + [extra]).covered


def test_brute_force_examples(valley, peak, w_shape):
    assert brute_force_optimal(peak).guards == (0, 1, 2)
    assert brute_force_optimal(valley).guards == (0, 2)
    assert brute_force_optimal(w_shape).guards == (0, 2, 4)
    assert brute_force_optimal(w_shape, "continuous").guards == (0, 2, 4)


def test_one_sided_examples(valley, peak, w_shape):
    assert minimal_one_sided_oracle(peak, build_witness_set(peak), "left", (0,)) == 1
    assert minimal_one_sided_oracle(valley, build_witness_set(valley), "left", (0,)) == 0
    assert minimal_one_sided_oracle(w_shape, build_witness_set(w_shape), "right", (4,)) == 1


def test_witness_optimum_bounds_continuous():
    for t in random_terrains(60, 3, 10, seed=35):
        w = brute_force_optimal(t)
        c = brute_force_optimal(t, "continuous")
        assert len(w) <= len(c)
        assert verify_two_sided_continuous(t, w).covered
        assert len(w) == len(c)


def test_size_limit():
    t = gen_terrain(GenSpec(20, seed=1))
    with pytest.raises(OracleLimitError):
        brute_force_optimal(t)
    with pytest.raises(OracleLimitError):
        minimal_one_sided_oracle(t, build_witness_set(t), "left", max_n=10)
    with pytest.raises(ValueError):
        minimal_one_sided_oracle(t, build_witness_set(t), "up", max_n=30)


def test_vertex_only_gap_fixture():
    doc = json.loads((FIXTURES / "vertex_only_gap.json").read_text())
    t = parse_terrain(doc["vertices"])
    assert t.n == 5
    vo = doc["vertex_only_guards"]
    assert verify_vertices(t, vo)
    cert = verify_two_sided_continuous(t, vo)
    assert not cert.covered and not cert.failing_point.is_vertex
    rep = solve(t)
    assert rep.verified and list(rep.guard_set.guards) == doc["solver_guards"]
    assert len(rep.guard_set) == len(vo)

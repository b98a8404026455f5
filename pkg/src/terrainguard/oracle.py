"""Ground truth: exact continuous coverage checks and exhaustive search.

Continuous verification overlays every guard's visible interval on each
edge.  Between consecutive interval endpoints no guard changes status, so
checking one interior point per piece (plus the endpoints and vertices)
decides coverage of the whole terrain exactly.

The exhaustive searches evaluate visibility pointwise with
:func:`~terrainguard.terrain.sees` rather than through the interval sweep,
so they stay independent of the code paths they are used to check.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .discretize import WitnessSet, build_witness_set, visibility_profile
from .solver import GuardSet
from .terrain import Terrain, TerrainPoint, point_on_edge, sees, vertex_point

__all__ = [
    "OracleLimitError",
    "CoverageCertificate",
    "verify_two_sided_continuous",
    "verify_vertices",
    "witness_masks",
    "witnesses_covered",
    "brute_force_optimal",
    "minimal_one_sided_oracle",
]

DEFAULT_MAX_N = 18


class OracleLimitError(ValueError):
    """The instance is too large for exhaustive search."""


@dataclass
class CoverageCertificate:
    covered: bool
    failing_point: TerrainPoint | None = None
    # (edge, t_lo, t_hi, left guard, right guard) per atomic piece
    segments: list = field(default_factory=list)
    # (vertex, left guard, right guard)
    vertices: list = field(default_factory=list)
    reason: str = ""

    @property
    def verdict(self) -> str:
        return "covered" if self.covered else "uncovered"


def _pick(left: list[int], right: list[int]):
    """Leftmost left guard and rightmost right guard, required distinct."""
    if not left or not right:
        return None
    a, b = min(left), max(right)
    if a == b:
        return None
    return a, b


def _guards(guards) -> list[int]:
    if isinstance(guards, GuardSet):
        return list(guards.guards)
    return sorted(set(guards))


def verify_two_sided_continuous(terrain: Terrain, guards, stop_early: bool = True) -> CoverageCertificate:
    """Decide whether ``guards`` two-sided guard every point of the terrain."""
    gs = _guards(guards)
    if not gs:
        raise ValueError("guard set is empty")
    n = terrain.n
    vis = {}
    per_edge: list[list[tuple[int, Fraction, Fraction]]] = [[] for _ in range(n - 1)]
    for g in gs:
        v, intervals = visibility_profile(terrain, g)
        vis[g] = v
        for k, iv in intervals.items():
            per_edge[k].append((g, iv.t_lo, iv.t_hi))

    cert = CoverageCertificate(True)

    def fail(point, why):
        cert.covered = False
        if cert.failing_point is None:
            cert.failing_point, cert.reason = point, why

    # edge interiors first so a failure is reported at a non-vertex point when one exists
    for k, ivs in enumerate(per_edge):
        cuts = sorted({Fraction(0), Fraction(1), *(lo for _, lo, _ in ivs), *(hi for _, _, hi in ivs)})
        # midpoints of atomic pieces, then the interior cut points themselves
        probes = [((a + b) / 2, (a, b)) for a, b in zip(cuts, cuts[1:])]
        probes += [(c, None) for c in cuts[1:-1]]
        for t, piece in probes:
            left = [g for g, lo, hi in ivs if g <= k and lo <= t <= hi]
            right = [g for g, lo, hi in ivs if g >= k + 1 and lo <= t <= hi]
            pair = _pick(left, right)
            if pair is None:
                side = "left" if not left else "right"
                fail(point_on_edge(terrain, k, t), f"no {side} guard on edge {k} at t={t}")
                if stop_early:
                    return cert
            elif piece is not None:
                cert.segments.append((k, *piece, *pair))

    for j in range(n):
        left = [g for g in gs if g <= j and vis[g][j]]
        right = [g for g in gs if g >= j and vis[g][j]]
        pair = _pick(left, right)
        if pair is None:
            fail(vertex_point(terrain, j), f"vertex {j} lacks two distinct guards")
            if stop_early:
                return cert
        else:
            cert.vertices.append((j, *pair))
    return cert


def verify_vertices(terrain: Terrain, guards) -> bool:
    """Two-sided coverage of the vertex set only."""
    gs = _guards(guards)
    for j in range(terrain.n):
        p = vertex_point(terrain, j)
        left = [g for g in gs if g <= j and sees(terrain, vertex_point(terrain, g), p)]
        right = [g for g in gs if g >= j and sees(terrain, vertex_point(terrain, g), p)]
        if _pick(left, right) is None:
            return False
    return True


def witness_masks(terrain: Terrain, points: Iterable[TerrainPoint]):
    """Per witness, bitmasks of the vertices that can left- and right-guard it."""
    verts = [vertex_point(terrain, i) for i in range(terrain.n)]
    out = []
    for p in points:
        lm = rm = 0
        for i, v in enumerate(verts):
            if v.x <= p.x and sees(terrain, v, p):
                lm |= 1 << i
            if v.x >= p.x and sees(terrain, v, p):
                rm |= 1 << i
        out.append((lm, rm))
    return out


def witnesses_covered(terrain: Terrain, witnesses: WitnessSet, guards) -> bool:
    mask = 0
    for g in _guards(guards):
        mask |= 1 << g
    return all(lm & mask and rm & mask for lm, rm in witness_masks(terrain, witnesses.points))


def _check_size(terrain: Terrain, max_n: int):
    if terrain.n > max_n:
        raise OracleLimitError(f"n={terrain.n} exceeds the exhaustive-search bound {max_n}")


def brute_force_optimal(terrain: Terrain, target: str = "witnesses", max_n: int = DEFAULT_MAX_N,
                        witnesses: WitnessSet | None = None) -> GuardSet:
    """Smallest (then lexicographically first) guard set covering ``target``.

    ``target`` is ``"witnesses"`` (two-sided coverage of the witness set) or
    ``"continuous"`` (exact coverage of the whole terrain).  Both endpoints
    are always included.
    """
    if target not in ("witnesses", "continuous"):
        raise ValueError(f"unknown target {target!r}")
    _check_size(terrain, max_n)
    n = terrain.n
    if witnesses is None:
        witnesses = build_witness_set(terrain, "paper")
    masks = witness_masks(terrain, witnesses.points)
    forced = (1 << 0) | (1 << (n - 1))
    inner = list(range(1, n - 1))
    for size in range(len(inner) + 1):
        for combo in combinations(inner, size):
            mask = forced
            for v in combo:
                mask |= 1 << v
            if not all(lm & mask and rm & mask for lm, rm in masks):
                continue
            guards = (0, *combo, n - 1)
            if target == "continuous" and not verify_two_sided_continuous(terrain, guards).covered:
                continue
            return GuardSet(guards)
    raise AssertionError("the full vertex set always covers the terrain")


def minimal_one_sided_oracle(terrain: Terrain, witnesses: WitnessSet, side: str,
                             seed=(), max_n: int = DEFAULT_MAX_N) -> int:
    """Fewest vertices to add to ``seed`` so all witnesses are guarded from ``side``."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    _check_size(terrain, max_n)
    masks = [lm if side == "left" else rm for lm, rm in witness_masks(terrain, witnesses.points)]
    base = 0
    for s in seed:
        base |= 1 << s
    todo = [m for m in masks if not m & base]
    if not todo:
        return 0
    free = [v for v in range(terrain.n) if not base >> v & 1]
    for size in range(1, len(free) + 1):
        for combo in combinations(free, size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if all(m & mask for m in todo):
                return size
    raise AssertionError("adding every vertex always suffices")

"""Boundary points and finite witness sets.

From a vertex ``g`` looking right, a point ``p`` on edge ``k > g`` is
visible iff its slope from ``g`` is at least the largest slope from ``g``
to any vertex in ``(g, k]``.  The slope of ``p(t)`` is monotone in ``t``,
so the visible part of each edge is one closed interval, and a sweep that
keeps the running steepest vertex (the horizon) yields every interval in
O(n) per vertex.  The left side is handled by reflecting the terrain.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from .terrain import Terrain, TerrainError, TerrainPoint, point_on_edge

__all__ = [
    "VisibilityInterval",
    "BoundaryPoint",
    "WitnessSet",
    "visible_interval",
    "visibility_profile",
    "boundary_points",
    "build_witness_set",
    "custom_witness_set",
]

WitnessMode = Literal["paper", "dense", "custom"]

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class VisibilityInterval:
    edge: int
    t_lo: Fraction
    t_hi: Fraction
    # steepest blocking vertex when the interval ends inside the edge
    through: int | None = None

    def __contains__(self, t) -> bool:
        return self.t_lo <= t <= self.t_hi


@dataclass(frozen=True)
class BoundaryPoint:
    point: TerrainPoint
    source_vertex: int
    through_vertex: int


@dataclass(frozen=True)
class WitnessSet:
    points: tuple[TerrainPoint, ...]
    mode: str = "paper"

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @property
    def edges(self) -> list[int]:
        return [p.edge for p in self.points]


def _mirror(xs: Sequence[int], ys: Sequence[int]) -> tuple[list[int], list[int]]:
    return [-x for x in reversed(xs)], list(reversed(ys))


def _sweep_right(xs, ys, g):
    """Visibility from vertex ``g`` of everything to its right.

    Returns ``(vis, spans)``: ``vis[i]`` for ``i > g`` tells whether vertex
    ``i`` is seen, and ``spans`` maps each edge ``k >= g`` with a
    non-degenerate visible part to ``(t_lo, through)``; the visible part is
    always ``[t_lo, 1]`` on this side.
    """
    n = len(xs)
    vis = [False] * n
    vis[g] = True
    spans = {}
    if g + 1 >= n:
        return vis, spans
    gx, gy = xs[g], ys[g]
    spans[g] = (ZERO, None)
    vis[g + 1] = True
    best = g + 1
    bdx, bdy = xs[best] - gx, ys[best] - gy
    # cross(horizon, v_k - g); never positive
    c0 = 0
    for k in range(g + 1, n - 1):
        cb = bdx * (ys[k + 1] - gy) - bdy * (xs[k + 1] - gx)
        if cb >= 0:
            vis[k + 1] = True
            if c0 == 0:
                spans[k] = (ZERO, None)
            elif cb > 0:
                spans[k] = (Fraction(-c0, cb - c0), best)
            best = k + 1
            bdx, bdy = xs[best] - gx, ys[best] - gy
            c0 = 0
        else:
            c0 = cb
    return vis, spans


def _shadow_ends_right(xs, ys, g, out):
    # (edge, t, source, through) for every shadow that ends inside an edge
    n = len(xs)
    if g + 1 >= n:
        return
    gx, gy = xs[g], ys[g]
    best = g + 1
    bdx, bdy = xs[best] - gx, ys[best] - gy
    c0 = 0
    for k in range(g + 1, n - 1):
        cb = bdx * (ys[k + 1] - gy) - bdy * (xs[k + 1] - gx)
        if cb >= 0:
            if c0 != 0 and cb > 0:
                out.append((k, Fraction(-c0, cb - c0), g, best))
            best = k + 1
            bdx, bdy = xs[best] - gx, ys[best] - gy
            c0 = 0
        else:
            c0 = cb


def visibility_profile(terrain: Terrain, g: int):
    """Everything vertex ``g`` sees.

    Returns ``(vis, intervals)`` where ``vis[i]`` says whether vertex ``i``
    is seen and ``intervals`` maps edge index to its
    :class:`VisibilityInterval`.  Edges whose visible part is a single
    endpoint are left out; that endpoint shows up in ``vis`` instead.
    """
    if not 0 <= g < terrain.n:
        raise TerrainError(f"vertex index {g} out of range")
    xs, ys = terrain.int_coords
    n = terrain.n
    vis, spans = _sweep_right(xs, ys, g)
    intervals = {k: VisibilityInterval(k, lo, ONE, th) for k, (lo, th) in spans.items()}
    mx, my = _mirror(xs, ys)
    rvis, rspans = _sweep_right(mx, my, n - 1 - g)
    for i in range(g):
        vis[i] = rvis[n - 1 - i]
    for k, (lo, th) in rspans.items():
        e = n - 2 - k
        intervals[e] = VisibilityInterval(e, ZERO, ONE - lo, None if th is None else n - 1 - th)
    return vis, intervals


def visible_interval(terrain: Terrain, v: int, k: int) -> VisibilityInterval | None:
    """The closed part of edge ``k`` seen from vertex ``v``, or None.

    A visible set consisting of a single edge endpoint is reported as None
    (that contact is a vertex-to-vertex sighting, not a piece of the edge).
    """
    if not 0 <= v < terrain.n:
        raise TerrainError(f"vertex index {v} out of range")
    if not 0 <= k < terrain.n_edges:
        raise TerrainError(f"edge index {k} out of range")
    if k == v or k == v - 1:
        return VisibilityInterval(k, ZERO, ONE)
    xs, ys = terrain.int_coords
    if k > v:
        _, spans = _sweep_right(xs[: k + 2], ys[: k + 2], v)
        if k not in spans:
            return None
        lo, th = spans[k]
        return VisibilityInterval(k, lo, ONE, th)
    n = terrain.n
    mx, my = _mirror(xs, ys)
    kk = n - 2 - k
    _, spans = _sweep_right(mx[: kk + 2], my[: kk + 2], n - 1 - v)
    if kk not in spans:
        return None
    lo, th = spans[kk]
    return VisibilityInterval(k, ZERO, ONE - lo, None if th is None else n - 1 - th)


def boundary_points(terrain: Terrain) -> list[BoundaryPoint]:
    """All interior edge points where some vertex's shadow ends, sorted by x.

    Each is reported once; when several vertices produce the same point the
    smallest source index is kept.
    """
    xs, ys = terrain.int_coords
    n = terrain.n
    raw = []
    for g in range(n - 2):
        _shadow_ends_right(xs, ys, g, raw)
    mx, my = _mirror(xs, ys)
    mirrored = []
    for g in range(n - 2):
        _shadow_ends_right(mx, my, g, mirrored)
    for k, t, src, th in mirrored:
        raw.append((n - 2 - k, ONE - t, n - 1 - src, n - 1 - th))

    found: dict[tuple[int, Fraction], tuple[int, int]] = {}
    for k, t, src, th in raw:
        key = (k, t)
        if key not in found or src < found[key][0]:
            found[key] = (src, th)
    return [
        BoundaryPoint(point_on_edge(terrain, k, t), src, th)
        for (k, t), (src, th) in sorted(found.items())
    ]


def _group_by_edge(n_edges: int, bps: Sequence[BoundaryPoint]) -> list[list[Fraction]]:
    per_edge: list[list[Fraction]] = [[] for _ in range(n_edges)]
    for b in bps:
        per_edge[b.point.edge].append(b.point.t)
    for ts in per_edge:
        ts.sort()
    return per_edge


def build_witness_set(terrain: Terrain, mode: WitnessMode = "paper",
                      bps: Sequence[BoundaryPoint] | None = None) -> WitnessSet:
    """Witness points whose two-sided coverage implies coverage of the terrain.

    ``paper``: one midpoint on an edge without boundary points, otherwise the
    midpoints of the first and last open pieces.  ``dense``: the midpoint of
    every piece the boundary points cut the edge into.
    """
    if mode not in ("paper", "dense"):
        raise ValueError(f"unknown witness mode {mode!r}")
    if bps is None:
        bps = boundary_points(terrain)
    pts = []
    for k, ts in enumerate(_group_by_edge(terrain.n_edges, bps)):
        cuts = [ZERO, *ts, ONE]
        if mode == "dense" or len(ts) == 0:
            params = [(a + b) / 2 for a, b in zip(cuts, cuts[1:])]
        else:
            params = [ts[0] / 2, (ts[-1] + 1) / 2]
        pts.extend(point_on_edge(terrain, k, t) for t in params)
    return WitnessSet(tuple(pts), mode)


def custom_witness_set(terrain: Terrain, params: Sequence[tuple[int, Fraction]]) -> WitnessSet:
    """Wrap caller-chosen ``(edge, t)`` points; each must be edge-interior."""
    pts = []
    for k, t in sorted(params):
        p = point_on_edge(terrain, k, t)
        if p.is_vertex:
            raise TerrainError(f"witness ({k}, {t}) is a vertex")
        pts.append(p)
    return WitnessSet(tuple(pts), "custom")

"""Leftmost / rightmost visible vertex for every vertex and witness.

The left sweep processes ``Q = X + V(T)`` in x order and keeps, for each
vertex, its leftmost visible vertex ``L``.  To place a new point ``q`` it
starts from a point ``c`` that sees ``q`` and hops ``c <- L(c)`` while
``q`` sees ``L(c)``; the first failed hop leaves ``L(q) = c``.

Because ``c`` sees ``q`` and ``L(c)`` sees ``c``, ``q`` sees ``L(c)``
exactly when ``c`` lies on or below the line ``L(c) -> q``: the chord then
dominates the two-segment path through ``c``, and otherwise ``c`` itself
pokes above it.  Each hop test is therefore one orientation sign.
"""
from __future__ import annotations

from dataclasses import dataclass

from .discretize import WitnessSet
from .terrain import Terrain, TerrainPoint, _hom, sees, vertex_point

__all__ = ["ExtremeMap", "compute_all_extremes", "brute_extreme"]


@dataclass
class ExtremeMap:
    vertex_left: list[int]
    vertex_right: list[int]
    witness_left: list[int]
    witness_right: list[int]
    left_work: int = 0
    right_work: int = 0

    @property
    def work(self) -> int:
        return self.left_work + self.right_work

    def merged(self, terrain: Terrain, witnesses: WitnessSet):
        """Yield ``(point, L, R)`` over vertices and witnesses in x order."""
        wi = 0
        pts = witnesses.points
        for j in range(terrain.n):
            yield vertex_point(terrain, j), self.vertex_left[j], self.vertex_right[j]
            while wi < len(pts) and pts[wi].edge == j:
                yield pts[wi], self.witness_left[wi], self.witness_right[wi]
                wi += 1


def _left_extremes(xs, ys, w_edges, w_hom):
    n, m = len(xs), len(w_edges)
    lv = [0] * n
    lw = [0] * m
    work = 0

    def hop(c, X, Y, W):
        nonlocal work
        while c:
            a = lv[c]
            work += 1
            ax, ay = xs[a], ys[a]
            if (X - ax * W) * (ys[c] - ay) - (Y - ay * W) * (xs[c] - ax) <= 0:
                c = a
            else:
                break
        return c

    def from_witness(prev, X, Y, W, fallback):
        # previous point on the same edge is a witness; try its L first
        nonlocal work
        a, (px, py, pw) = prev
        work += 1
        ax, ay = xs[a], ys[a]
        if (X - ax * W) * (py - ay * pw) - (Y - ay * W) * (px - ax * pw) <= 0:
            return hop(a, X, Y, W)
        return hop(fallback, X, Y, W)

    wi = 0
    last = None
    for j in range(n):
        if j > 0:
            if last is not None:
                lv[j] = from_witness(last, xs[j], ys[j], 1, j - 1)
            else:
                lv[j] = hop(j - 1, xs[j], ys[j], 1)
        last = None
        while wi < m and w_edges[wi] == j:
            X, Y, W = w_hom[wi]
            if last is None:
                lw[wi] = hop(j, X, Y, W)
            else:
                lw[wi] = from_witness(last, X, Y, W, j)
            last = (lw[wi], w_hom[wi])
            wi += 1
    return lv, lw, work


def compute_all_extremes(terrain: Terrain, witnesses: WitnessSet) -> ExtremeMap:
    xs, ys = terrain.int_coords
    n = terrain.n
    icoords = terrain.int_coords
    w_edges = [p.edge for p in witnesses.points]
    w_hom = [_hom(icoords, p.edge, p.t) for p in witnesses.points]
    lv, lw, lwork = _left_extremes(xs, ys, w_edges, w_hom)

    mxs = [-x for x in reversed(xs)]
    mys = list(reversed(ys))
    m_edges = [n - 2 - e for e in reversed(w_edges)]
    m_hom = [(-X, Y, W) for X, Y, W in reversed(w_hom)]
    rv, rw, rwork = _left_extremes(mxs, mys, m_edges, m_hom)
    m = len(w_edges)
    return ExtremeMap(
        vertex_left=lv,
        vertex_right=[n - 1 - rv[n - 1 - i] for i in range(n)],
        witness_left=lw,
        witness_right=[n - 1 - rw[m - 1 - i] for i in range(m)],
        left_work=lwork,
        right_work=rwork,
    )


def brute_extreme(terrain: Terrain, p: TerrainPoint) -> tuple[int, int]:
    """Leftmost and rightmost vertex seeing ``p``, by scanning every vertex."""
    seen = [i for i in range(terrain.n) if sees(terrain, vertex_point(terrain, i), p)]
    return seen[0], seen[-1]

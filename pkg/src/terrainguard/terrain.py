"""Exact 1.5D terrains and the vertex/point visibility predicate.

Coordinates are held as :class:`fractions.Fraction`.  Every predicate is
evaluated on integers: the terrain is uniformly scaled by the lcm of its
coordinate denominators (orientation signs are invariant under positive
scaling), and points on edges are carried in homogeneous form
``(X, Y, W)`` with ``W > 0``.

Indices are 0-based: vertex ``i`` is ``vertices[i]`` and edge ``i`` joins
vertex ``i`` to vertex ``i + 1``.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "TerrainError",
    "Terrain",
    "TerrainPoint",
    "parse_rational",
    "format_rational",
    "parse_terrain",
    "point_on_edge",
    "vertex_point",
    "sees",
    "load_terrain",
    "dump_terrain",
    "terrain_to_json",
    "terrain_from_json",
]


class TerrainError(ValueError):
    """Raised for malformed terrains, points or indices."""


def parse_rational(value) -> Fraction:
    """Promote an int, Fraction or ``"p/q"`` string to an exact Fraction."""
    if isinstance(value, bool):
        raise TerrainError(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ZeroDivisionError:
            raise TerrainError(f"zero denominator in {value!r}") from None
        except ValueError:
            raise TerrainError(f"malformed rational {value!r}") from None
    # floats are rejected on purpose: they are not exact inputs
    raise TerrainError(f"not an exact rational: {value!r}")


def format_rational(q: Fraction):
    """Canonical JSON form: a bare int when integral, else ``"p/q"``."""
    q = Fraction(q)
    if q.denominator == 1:
        return q.numerator
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Terrain:
    vertices: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        if len(self.vertices) < 2:
            raise TerrainError("a terrain needs at least 2 vertices")
        for (x0, _), (x1, _) in zip(self.vertices, self.vertices[1:]):
            if not x0 < x1:
                raise TerrainError(f"x-coordinates must strictly increase ({x0} then {x1})")

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.vertices) - 1

    @cached_property
    def scale(self) -> int:
        d = 1
        for x, y in self.vertices:
            d = math.lcm(d, x.denominator, y.denominator)
        return d

    @cached_property
    def int_coords(self) -> tuple[list[int], list[int]]:
        """Vertex coordinates multiplied by :attr:`scale`; all integers."""
        d = self.scale
        xs = [int(x * d) for x, _ in self.vertices]
        ys = [int(y * d) for _, y in self.vertices]
        return xs, ys

    def reflected(self) -> "Terrain":
        """Mirror image under x -> -x; vertex i maps to vertex n-1-i."""
        return Terrain(tuple((-x, y) for x, y in reversed(self.vertices)))

    def vertex(self, i: int) -> "TerrainPoint":
        return vertex_point(self, i)


@dataclass(frozen=True)
class TerrainPoint:
    """A point on the terrain, located by edge index and parameter ``t``.

    Vertex ``j`` is stored canonically as ``edge = min(j, n-2)`` with
    ``t = 0`` (or ``t = 1`` for the last vertex).
    """

    edge: int
    t: Fraction
    x: Fraction
    y: Fraction

    @property
    def is_vertex(self) -> bool:
        return self.t == 0 or self.t == 1

    @property
    def vertex_index(self) -> int | None:
        if self.t == 0:
            return self.edge
        if self.t == 1:
            return self.edge + 1
        return None

    def __lt__(self, other: "TerrainPoint") -> bool:
        return self.x < other.x

    def __le__(self, other: "TerrainPoint") -> bool:
        return self.x <= other.x

    def hom(self, terrain: Terrain) -> tuple[int, int, int]:
        """Homogeneous integer coordinates in the terrain's scaled frame."""
        return _hom(terrain.int_coords, self.edge, self.t)


def _hom(int_coords, edge: int, t: Fraction) -> tuple[int, int, int]:
    xs, ys = int_coords
    a, b = t.numerator, t.denominator
    x0, y0 = xs[edge], ys[edge]
    return (x0 * b + a * (xs[edge + 1] - x0), y0 * b + a * (ys[edge + 1] - y0), b)


def parse_terrain(raw: Iterable[Sequence]) -> Terrain:
    """Build a validated terrain from ``[(x, y), ...]`` pairs."""
    verts = []
    for pair in raw:
        if len(pair) != 2:
            raise TerrainError(f"expected an (x, y) pair, got {pair!r}")
        verts.append((parse_rational(pair[0]), parse_rational(pair[1])))
    return Terrain(tuple(verts))


def point_on_edge(terrain: Terrain, edge: int, t) -> TerrainPoint:
    """The point ``v_edge + t * (v_{edge+1} - v_edge)``, in canonical form."""
    if not 0 <= edge < terrain.n_edges:
        raise TerrainError(f"edge index {edge} out of range [0, {terrain.n_edges})")
    t = parse_rational(t)
    if not 0 <= t <= 1:
        raise TerrainError(f"edge parameter {t} outside [0, 1]")
    if t == 1 and edge + 1 < terrain.n_edges:
        edge, t = edge + 1, Fraction(0)
    (x0, y0), (x1, y1) = terrain.vertices[edge], terrain.vertices[edge + 1]
    return TerrainPoint(edge, t, x0 + t * (x1 - x0), y0 + t * (y1 - y0))


def vertex_point(terrain: Terrain, i: int) -> TerrainPoint:
    if not 0 <= i < terrain.n:
        raise TerrainError(f"vertex index {i} out of range [0, {terrain.n})")
    x, y = terrain.vertices[i]
    if i == terrain.n - 1:
        return TerrainPoint(i - 1, Fraction(1), x, y)
    return TerrainPoint(i, Fraction(0), x, y)


def _first_vertex_after(p: TerrainPoint) -> int:
    # smallest vertex index with x strictly greater than p.x
    return p.edge + 1 if p.t < 1 else p.edge + 2


def _last_vertex_before(p: TerrainPoint) -> int:
    # largest vertex index with x strictly less than p.x
    return p.edge - 1 if p.t == 0 else p.edge


def sees(terrain: Terrain, p: TerrainPoint, q: TerrainPoint) -> bool:
    """True iff the closed segment pq lies on or above the terrain.

    Only the vertices strictly between p and q in x can lie above the
    segment; each is tested with an exact orientation sign.
    """
    if q.x < p.x:
        p, q = q, p
    lo, hi = _first_vertex_after(p), _last_vertex_before(q)
    if lo > hi:
        return True
    xs, ys = terrain.int_coords
    px, py, pw = p.hom(terrain)
    qx, qy, qw = q.hom(terrain)
    # direction p->q scaled by pw*qw > 0
    dx = qx * pw - px * qw
    dy = qy * pw - py * qw
    for k in range(hi, lo - 1, -1):
        # (v_k - p) scaled by pw, then cross with direction; > 0 means v_k above
        ux = xs[k] * pw - px
        uy = ys[k] * pw - py
        if dx * uy - dy * ux > 0:
            return False
    return True


def sees_vertex_hom(xs: list[int], ys: list[int], g: int, q: tuple[int, int, int], last: int) -> bool:
    """Fast left-to-right check: does vertex ``g`` see homogeneous point ``q``?

    ``last`` is the largest vertex index strictly left of ``q`` (``g <= last``).
    Scans the blockers right-to-left so the nearest obstruction exits early.
    """
    X, Y, W = q
    gx, gy = xs[g], ys[g]
    dx = X - gx * W
    dy = Y - gy * W
    for k in range(last, g, -1):
        if dx * (ys[k] - gy) - dy * (xs[k] - gx) > 0:
            return False
    return True


# --- JSON ------------------------------------------------------------------

def terrain_to_json(terrain: Terrain) -> dict:
    return {"vertices": [[format_rational(x), format_rational(y)] for x, y in terrain.vertices]}


def terrain_from_json(doc: dict) -> Terrain:
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise TerrainError('terrain JSON needs a "vertices" list')
    return parse_terrain(doc["vertices"])


def load_terrain(path) -> Terrain:
    with open(path) as fh:
        return terrain_from_json(json.load(fh))


def dump_terrain(terrain: Terrain, path) -> None:
    with open(path, "w") as fh:
        json.dump(terrain_to_json(terrain), fh)
        fh.write("\n")

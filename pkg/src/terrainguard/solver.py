"""Greedy two-sided guard placement.

Both endpoints are forced (only ``v_1`` can left-guard ``v_1``, only
``v_n`` can right-guard ``v_n``).  The right pass then walks the witnesses
right to left and, whenever one has no right guard yet, adds its rightmost
visible vertex.  The left pass does the mirror image, starting from the
endpoints plus whatever the right pass chose.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from .discretize import WitnessSet, boundary_points, build_witness_set
from .extremes import ExtremeMap, compute_all_extremes
from .terrain import Terrain, _hom, sees_vertex_hom

__all__ = ["GuardSet", "PassResult", "SolveReport", "left_guarding", "right_guarding", "solve"]


@dataclass(frozen=True)
class GuardSet:
    guards: tuple[int, ...]
    provenance: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "guards", tuple(sorted(set(self.guards))))

    def __contains__(self, v) -> bool:
        return v in self.guards

    def __len__(self) -> int:
        return len(self.guards)

    def __iter__(self):
        return iter(self.guards)


@dataclass
class PassResult:
    guards: GuardSet
    added: list[int]
    # witness index -> guard serving it
    assignment: list[int]
    visits: int


def _left_pass(xs, ys, w_edges, w_hom, w_left, seed):
    """Algorithm core in the left-guarding orientation.

    ``seed`` is a sorted list of vertices already in the guard set.  The
    stack holds active candidates left of the current witness, rightmost on
    top; a candidate that fails to see a witness is dominated by whichever
    guard ends up covering it and is dropped for good.
    """
    stack: list[int] = []
    si = 0
    in_set = set(seed)
    added = []
    assignment = [0] * len(w_edges)
    visits = 0
    for i, e in enumerate(w_edges):
        while si < len(seed) and seed[si] <= e:
            stack.append(seed[si])
            si += 1
        lx = w_left[i]
        q = w_hom[i]
        while True:
            visits += 1
            p = stack[-1] if stack else -1
            if p < lx:
                # nothing left in the stack can see q
                if lx not in in_set:
                    in_set.add(lx)
                    added.append(lx)
                stack.append(lx)
                assignment[i] = lx
                break
            if sees_vertex_hom(xs, ys, p, q, e):
                assignment[i] = p
                break
            stack.pop()
    return sorted(in_set), added, assignment, visits


def left_guarding(terrain: Terrain, witnesses: WitnessSet, ext: ExtremeMap,
                  seed=(0,)) -> PassResult:
    """Extend ``seed`` so every witness has a guard at or left of it that sees it."""
    xs, ys = terrain.int_coords
    w_edges = [p.edge for p in witnesses.points]
    w_hom = [_hom((xs, ys), p.edge, p.t) for p in witnesses.points]
    guards, added, assignment, visits = _left_pass(
        xs, ys, w_edges, w_hom, ext.witness_left, sorted(set(seed)))
    return PassResult(GuardSet(tuple(guards)), added, assignment, visits)


def right_guarding(terrain: Terrain, witnesses: WitnessSet, ext: ExtremeMap,
                   seed=None) -> PassResult:
    """Mirror of :func:`left_guarding`: rightmost unserved witness forces R(x)."""
    n = terrain.n
    if seed is None:
        seed = (n - 1,)
    xs, ys = terrain.int_coords
    pts = witnesses.points
    m = len(pts)
    mxs = [-x for x in reversed(xs)]
    mys = list(reversed(ys))
    m_edges = [n - 2 - p.edge for p in reversed(pts)]
    m_hom = []
    for p in reversed(pts):
        X, Y, W = _hom((xs, ys), p.edge, p.t)
        m_hom.append((-X, Y, W))
    m_left = [n - 1 - r for r in reversed(ext.witness_right)]
    guards, added, assignment, visits = _left_pass(
        mxs, mys, m_edges, m_hom, m_left, sorted(n - 1 - s for s in set(seed)))
    return PassResult(
        GuardSet(tuple(n - 1 - g for g in guards)),
        [n - 1 - g for g in added],
        [n - 1 - assignment[m - 1 - i] for i in range(m)],
        visits,
    )


@dataclass
class SolveReport:
    guard_set: GuardSet
    witness_mode: str
    n_vertices: int
    n_witnesses: int
    n_boundary_points: int
    extremes_work: tuple[int, int]
    pass_visits: tuple[int, int]  # (right pass, left pass)
    right_added: list[int]
    left_added: list[int]
    verified: bool | None
    wall_time: float
    witnesses: WitnessSet | None = None
    extremes: ExtremeMap | None = None

    @property
    def size(self) -> int:
        return len(self.guard_set)

    @property
    def visit_bound(self) -> int:
        return 2 * self.n_witnesses + self.n_vertices


def solve_on(terrain: Terrain, witnesses: WitnessSet, ext: ExtremeMap | None = None):
    """Run both passes on a prepared witness set; returns ``(GuardSet, right, left)``."""
    n = terrain.n
    if ext is None:
        ext = compute_all_extremes(terrain, witnesses)
    right = right_guarding(terrain, witnesses, ext, seed=(0, n - 1))
    left = left_guarding(terrain, witnesses, ext, seed=(0, *right.guards.guards))
    prov = {0: "forced", n - 1: "forced"}
    for g in right.added:
        prov.setdefault(g, "right-pass")
    for g in left.added:
        prov.setdefault(g, "left-pass")
    return GuardSet(tuple(prov), prov), right, left


def solve(terrain: Terrain, mode: str = "paper", verify: bool = True) -> SolveReport:
    """Discretize, compute extremes, run both greedy passes, optionally verify."""
    from .oracle import verify_two_sided_continuous

    t0 = time.perf_counter()
    bps = boundary_points(terrain)
    witnesses = build_witness_set(terrain, mode, bps)
    ext = compute_all_extremes(terrain, witnesses)
    guard_set, right, left = solve_on(terrain, witnesses, ext)
    verified = None
    if verify:
        verified = verify_two_sided_continuous(terrain, guard_set).covered
    return SolveReport(
        guard_set=guard_set,
        witness_mode=mode,
        n_vertices=terrain.n,
        n_witnesses=len(witnesses),
        n_boundary_points=len(bps),
        extremes_work=(ext.left_work, ext.right_work),
        pass_visits=(right.visits, left.visits),
        right_added=right.added,
        left_added=left.added,
        verified=verified,
        wall_time=time.perf_counter() - t0,
        witnesses=witnesses,
        extremes=ext,
    )

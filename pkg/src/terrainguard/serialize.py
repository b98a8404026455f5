"""JSON shapes for points, boundary points, certificates and solve reports.

All indices are 0-based; rationals are ints or ``"p/q"`` strings.
"""
from __future__ import annotations

from .discretize import BoundaryPoint, WitnessSet
from .extremes import ExtremeMap
from .oracle import CoverageCertificate
from .solver import GuardSet, SolveReport
from .terrain import Terrain, TerrainPoint, format_rational as fr


def point_json(p: TerrainPoint) -> dict:
    return {"edge": p.edge, "t": fr(p.t), "x": fr(p.x), "y": fr(p.y)}


def boundary_json(b: BoundaryPoint) -> dict:
    return {**point_json(b.point), "source_vertex": b.source_vertex, "through_vertex": b.through_vertex}


def witnesses_json(ws: WitnessSet) -> dict:
    return {"mode": ws.mode, "points": [point_json(p) for p in ws.points]}


def guards_json(gs: GuardSet) -> dict:
    return {"guards": list(gs.guards),
            "provenance": {str(g): gs.provenance.get(g, "given") for g in gs.guards}}


def certificate_json(c: CoverageCertificate) -> dict:
    return {
        "verdict": c.verdict,
        "failing_point": None if c.failing_point is None else point_json(c.failing_point),
        "reason": c.reason,
        "vertices": [{"vertex": j, "left": a, "right": b} for j, a, b in c.vertices],
        "segments": [{"edge": k, "t_lo": fr(lo), "t_hi": fr(hi), "left": a, "right": b}
                     for k, lo, hi, a, b in c.segments],
    }


def extremes_json(terrain: Terrain, ws: WitnessSet, ext: ExtremeMap) -> dict:
    return {
        "points": [{**point_json(p), "L": lft, "R": rgt} for p, lft, rgt in ext.merged(terrain, ws)],
        "left_work": ext.left_work,
        "right_work": ext.right_work,
    }


def report_json(r: SolveReport, terrain: Terrain | None = None, emit_extremes: bool = False) -> dict:
    doc = {
        **guards_json(r.guard_set),
        "size": r.size,
        "witness_mode": r.witness_mode,
        "n_vertices": r.n_vertices,
        "n_witnesses": r.n_witnesses,
        "n_boundary_points": r.n_boundary_points,
        "counters": {
            "extremes_left": r.extremes_work[0],
            "extremes_right": r.extremes_work[1],
            "right_pass_visits": r.pass_visits[0],
            "left_pass_visits": r.pass_visits[1],
            "visit_bound": r.visit_bound,
        },
        "verified": r.verified,
        "verification": None if r.verified is None else ("covered" if r.verified else "uncovered"),
        "wall_time": r.wall_time,
    }
    if emit_extremes and terrain is not None and r.extremes is not None:
        doc["extremes"] = extremes_json(terrain, r.witnesses, r.extremes)
    return doc

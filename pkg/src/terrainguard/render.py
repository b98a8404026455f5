"""Static SVG figures of a terrain with guards, witnesses and boundary points."""
from __future__ import annotations

from typing import Iterable, Sequence

from .discretize import BoundaryPoint, WitnessSet, visibility_profile
from .terrain import Terrain

PALETTE = ("#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _fmt(v: float) -> str:
    return f"{v:.4f}".rstrip("0").rstrip(".")


def render_svg(terrain: Terrain, guards: Iterable[int] | None = None,
               witnesses: WitnessSet | None = None,
               boundary: Sequence[BoundaryPoint] | None = None,
               shade: bool = False) -> str:
    xs = [float(x) for x, _ in terrain.vertices]
    ys = [float(y) for _, y in terrain.vertices]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    w = (x1 - x0) or 1.0
    h = (y1 - y0) or 1.0
    mx, my = 0.05 * w, 0.05 * h
    vb = (x0 - mx, -(y1 + my), w + 2 * mx, h + 2 * my)
    r = 0.012 * max(w, h)
    stroke = 0.004 * max(w, h)

    def pt(x, y):
        # SVG y grows downward
        return _fmt(float(x)), _fmt(-float(y))

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{" ".join(_fmt(v) for v in vb)}">',
    ]
    guard_list = sorted(set(guards)) if guards is not None else []
    if shade:
        for gi, g in enumerate(guard_list):
            colour = PALETTE[gi % len(PALETTE)]
            _, intervals = visibility_profile(terrain, g)
            for k in sorted(intervals):
                iv = intervals[k]
                (ax, ay), (bx, by) = terrain.vertices[k], terrain.vertices[k + 1]
                p = pt(ax + iv.t_lo * (bx - ax), ay + iv.t_lo * (by - ay))
                q = pt(ax + iv.t_hi * (bx - ax), ay + iv.t_hi * (by - ay))
                out.append(f'<line class="visibility" data-guard="{g}" x1="{p[0]}" y1="{p[1]}" '
                           f'x2="{q[0]}" y2="{q[1]}" stroke="{colour}" stroke-opacity="0.35" '
                           f'stroke-width="{_fmt(stroke * 4)}"/>')
    pts = " ".join(",".join(pt(x, y)) for x, y in terrain.vertices)
    out.append(f'<polyline class="terrain" points="{pts}" fill="none" stroke="black" '
               f'stroke-width="{_fmt(stroke)}"/>')
    for g in guard_list:
        cx, cy = pt(*terrain.vertices[g])
        out.append(f'<circle class="guard" data-vertex="{g}" cx="{cx}" cy="{cy}" r="{_fmt(r * 1.4)}" '
                   'fill="#d62728"/>')
    if witnesses is not None:
        for p in witnesses.points:
            cx, cy = pt(p.x, p.y)
            out.append(f'<circle class="witness" cx="{cx}" cy="{cy}" r="{_fmt(r)}" fill="#1f77b4"/>')
    if boundary is not None:
        for b in boundary:
            cx, cy = pt(b.point.x, b.point.y)
            out.append(f'<rect class="boundary" x="{_fmt(float(cx) - r)}" y="{_fmt(float(cy) - r)}" '
                       f'width="{_fmt(2 * r)}" height="{_fmt(2 * r)}" fill="#2ca02c"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

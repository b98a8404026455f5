"""Command line: gen, discretize, solve, verify, oracle, render, campaign.

Exit status: 0 on success, 1 when a verification or feasibility check fails,
2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import campaign as campaign_mod
from .discretize import boundary_points, build_witness_set
from .gen import PROFILES, GenSpec, gen_terrain
from .oracle import OracleLimitError, brute_force_optimal, verify_two_sided_continuous
from .render import render_svg
from .serialize import (boundary_json, certificate_json, guards_json, report_json,
                        witnesses_json)
from .solver import solve
from .terrain import TerrainError, load_terrain, terrain_to_json


def _emit(doc, out):
    text = doc if isinstance(doc, str) else json.dumps(doc, indent=2) + "\n"
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _int_list(s: str) -> list[int]:
    try:
        return [int(v) for v in s.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}")


def _pair(s: str) -> tuple[int, int]:
    vals = _int_list(s)
    if len(vals) != 2:
        raise argparse.ArgumentTypeError(f"expected LO,HI, got {s!r}")
    return vals[0], vals[1]


def cmd_gen(a):
    t = gen_terrain(GenSpec(a.n, a.seed, a.heights, a.profile))
    _emit(json.dumps(terrain_to_json(t)) + "\n", a.out)
    return 0


def cmd_discretize(a):
    t = load_terrain(a.inp)
    bps = boundary_points(t)
    ws = build_witness_set(t, a.witnesses, bps)
    _emit({"boundary_points": [boundary_json(b) for b in bps], "witnesses": witnesses_json(ws)}, a.out)
    return 0


def cmd_solve(a):
    t = load_terrain(a.inp)
    rep = solve(t, a.witnesses)
    _emit(report_json(rep, t, emit_extremes=a.emit_extremes), a.out)
    return 0 if rep.verified else 1


def cmd_verify(a):
    t = load_terrain(a.inp)
    bad = [g for g in a.guards if not 0 <= g < t.n]
    if bad or not a.guards:
        print(f"invalid guard indices {bad or a.guards}", file=sys.stderr)
        return 2
    cert = verify_two_sided_continuous(t, a.guards, stop_early=False)
    _emit(certificate_json(cert), a.out)
    return 0 if cert.covered else 1


def cmd_oracle(a):
    t = load_terrain(a.inp)
    target = "continuous" if a.continuous else "witnesses"
    try:
        gs = brute_force_optimal(t, target, max_n=a.max_n)
    except OracleLimitError as e:
        print(e, file=sys.stderr)
        return 2
    _emit({**guards_json(gs), "size": len(gs), "target": target}, a.out)
    return 0


def cmd_render(a):
    t = load_terrain(a.inp)
    guards = a.guards
    if a.solve:
        guards = list(solve(t, a.witnesses, verify=False).guard_set.guards)
    ws = build_witness_set(t, a.witnesses) if a.show_witnesses else None
    bps = boundary_points(t) if a.boundary else None
    _emit(render_svg(t, guards, ws, bps, shade=a.shade), a.out)
    return 0


def cmd_campaign(a):
    summary = campaign_mod.campaign(
        a.count, (a.n_min, a.n_max), a.seed, a.witnesses, max_n=a.max_n,
        compare_modes=a.compare_modes, profiles=tuple(a.profiles.split(",")),
        height_range=a.heights, jobs=a.jobs, fixtures_dir=a.fixtures_dir)
    if a.csv:
        campaign_mod.write_csv(summary, a.csv)
    if not a.keep_instances:
        summary = {k: v for k, v in summary.items() if k != "instances"}
    _emit(summary, a.out)
    return 0 if not summary["counterexamples"] else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="terrainguard", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp, inp=True, witnesses=True):
        if inp:
            sp.add_argument("--in", dest="inp", required=True, help="terrain JSON file")
        sp.add_argument("--out", default=None, help="output file (default stdout)")
        if witnesses:
            sp.add_argument("--witnesses", choices=("paper", "dense"), default="paper")

    sp = sub.add_parser("gen", help="generate a seeded random terrain")
    common(sp, inp=False, witnesses=False)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--heights", type=_pair, default=(0, 8), help="LO,HI")
    sp.add_argument("--profile", choices=PROFILES, default="uniform")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("discretize", help="boundary points and witness set")
    common(sp)
    sp.set_defaults(func=cmd_discretize)

    sp = sub.add_parser("solve", help="greedy two-sided guard set")
    common(sp)
    sp.add_argument("--emit-extremes", action="store_true")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("verify", help="exact continuous coverage check")
    common(sp, witnesses=False)
    sp.add_argument("--guards", type=_int_list, required=True, help="e.g. 0,2,4")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("oracle", help="exhaustive minimum guard set")
    common(sp, witnesses=False)
    sp.add_argument("--continuous", action="store_true")
    sp.add_argument("--max-n", type=int, default=18)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("render", help="SVG figure")
    common(sp)
    sp.add_argument("--guards", type=_int_list, default=None)
    sp.add_argument("--solve", action="store_true", help="render the solver's guards")
    sp.add_argument("--show-witnesses", action="store_true")
    sp.add_argument("--boundary", action="store_true")
    sp.add_argument("--shade", action="store_true")
    sp.set_defaults(func=cmd_render)

    sp = sub.add_parser("campaign", help="randomized solve/verify/oracle campaign")
    common(sp, inp=False)
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--n-min", type=int, default=3)
    sp.add_argument("--n-max", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-n", type=int, default=12)
    sp.add_argument("--heights", type=_pair, default=(0, 8))
    sp.add_argument("--profiles", default="uniform", help="comma-separated")
    sp.add_argument("--compare-modes", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--fixtures-dir", default=None)
    sp.add_argument("--keep-instances", action="store_true")
    sp.add_argument("--csv", default=None)
    sp.set_defaults(func=cmd_campaign)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    try:
        return a.func(a)
    except (TerrainError, ValueError, OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

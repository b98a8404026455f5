"""Randomized gen -> solve -> verify -> oracle runs with counterexample shrinking."""
from __future__ import annotations

import csv
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable

from .gen import GenSpec, gen_terrain
from .oracle import brute_force_optimal, verify_two_sided_continuous
from .solver import solve
from .terrain import Terrain, terrain_to_json


@dataclass
class InstanceResult:
    index: int
    n: int
    seed: int
    profile: str
    size: int
    feasible: bool
    oracle_size: int | None = None
    dense_size: int | None = None
    extremes_ratio: float = 0.0
    visit_ratio: float = 0.0
    problems: list = field(default_factory=list)


def shrink(terrain: Terrain, still_fails: Callable[[Terrain], bool]) -> Terrain:
    """Delete vertices one at a time while the failure persists."""
    current = terrain
    progress = True
    while progress and current.n > 2:
        progress = False
        for i in range(current.n):
            cand = Terrain(current.vertices[:i] + current.vertices[i + 1:])
            if still_fails(cand):
                current, progress = cand, True
                break
    return current


def _oracle_gap(t: Terrain, mode: str) -> bool:
    return solve(t, mode, verify=False).size != len(brute_force_optimal(t))


def _infeasible(t: Terrain, mode: str) -> bool:
    return not solve(t, mode).verified


def _mode_gap(t: Terrain, mode: str) -> bool:
    return solve(t, "paper", verify=False).size != solve(t, "dense", verify=False).size


CHECKS = {"infeasible": _infeasible, "oracle-gap": _oracle_gap, "mode-gap": _mode_gap}


def run_instance(args) -> InstanceResult:
    index, spec, mode, max_n, compare_modes = args
    t = gen_terrain(spec)
    rep = solve(t, mode)
    q = rep.n_vertices + rep.n_witnesses
    res = InstanceResult(
        index=index, n=spec.n, seed=spec.seed, profile=spec.profile, size=rep.size,
        feasible=bool(rep.verified),
        extremes_ratio=max(rep.extremes_work) / q,
        visit_ratio=max(rep.pass_visits) / rep.visit_bound,
    )
    if not res.feasible:
        res.problems.append("infeasible")
    if max(rep.extremes_work) > 2 * q or max(rep.pass_visits) > rep.visit_bound:
        res.problems.append("work-bound")
    if spec.n <= max_n:
        opt = brute_force_optimal(t)
        res.oracle_size = len(opt)
        if res.oracle_size != rep.size:
            res.problems.append("oracle-gap")
        if not verify_two_sided_continuous(t, opt).covered:
            res.problems.append("oracle-infeasible")
    if compare_modes:
        res.dense_size = solve(t, "dense", verify=False).size
        if res.dense_size != rep.size:
            res.problems.append("mode-gap")
    return res


def campaign(count: int, n_range=(3, 10), seed: int = 0, mode: str = "paper",
             max_n: int = 12, compare_modes: bool = False, profiles=("uniform",),
             height_range=(0, 8), jobs: int = 1, fixtures_dir=None) -> dict:
    """Run ``count`` seeded instances and summarize.

    Failures are data: each failing instance is shrunk and, when
    ``fixtures_dir`` is given, written there as a terrain JSON file.
    """
    rng = random.Random(seed)
    tasks = []
    for i in range(count):
        spec = GenSpec(n=rng.randint(*n_range), seed=rng.getrandbits(63),
                       height_range=tuple(height_range), profile=profiles[i % len(profiles)])
        tasks.append((i, spec, mode, max_n, compare_modes))

    t0 = time.perf_counter()
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(run_instance, tasks, chunksize=max(1, count // (4 * jobs))))
    else:
        results = [run_instance(t) for t in tasks]
    results.sort(key=lambda r: r.index)

    counterexamples = []
    for r, (_, spec, *_rest) in zip(results, tasks):
        for problem in r.problems:
            check = CHECKS.get(problem)
            t = gen_terrain(spec)
            if check is not None:
                t = shrink(t, lambda c, check=check: check(c, mode))
            entry = {"problem": problem, "index": r.index, "seed": spec.seed,
                     "terrain": terrain_to_json(t)}
            if fixtures_dir is not None:
                path = Path(fixtures_dir) / f"{problem}-{r.index}-{spec.seed}.json"
                path.parent.mkdir(parents=True, exist_ok=True)
                path.write_text(json.dumps(entry["terrain"]) + "\n")
                entry["fixture"] = str(path)
            counterexamples.append(entry)

    compared = [r for r in results if r.oracle_size is not None]
    moded = [r for r in results if r.dense_size is not None]
    return {
        "count": count,
        "seed": seed,
        "mode": mode,
        "n_range": list(n_range),
        "feasible": sum(r.feasible for r in results),
        "oracle_compared": len(compared),
        "oracle_equal": sum(r.oracle_size == r.size for r in compared),
        "modes_compared": len(moded),
        "modes_equal": sum(r.dense_size == r.size for r in moded),
        "max_extremes_ratio": max((r.extremes_ratio for r in results), default=0.0),
        "max_visit_ratio": max((r.visit_ratio for r in results), default=0.0),
        "counterexamples": counterexamples,
        "instances": [asdict(r) for r in results],
        "elapsed": time.perf_counter() - t0,
    }


def write_csv(summary: dict, path) -> None:
    rows = summary["instances"]
    if not rows:
        return
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=list(rows[0]))
        w.writeheader()
        for row in rows:
            w.writerow({**row, "problems": ";".join(row["problems"])})

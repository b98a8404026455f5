"""Search small integer terrains for a vertex-only guard set that misses part of T.

Looks for a 5-vertex terrain whose minimum guard set for the vertices alone
is {v1, v2, v4, v5} (0-based 0,1,3,4) and yet fails continuous verification,
then writes it as a fixture.
"""
import argparse
import itertools
import json
from itertools import combinations

from terrainguard import parse_terrain, solve, verify_two_sided_continuous, verify_vertices
from terrainguard.terrain import terrain_to_json


def min_vertex_cover(t):
    n = t.n
    inner = range(1, n - 1)
    for k in range(n - 1):
        for combo in combinations(inner, k):
            gs = (0, *combo, n - 1)
            if verify_vertices(t, gs):
                return gs
    return tuple(range(n))


def general_position(ys):
    pts = list(enumerate(ys))
    for (ax, ay), (bx, by), (cx, cy) in combinations(pts, 3):
        if (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) == 0:
            return False
    return True


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-height", type=int, default=6)
    ap.add_argument("--out", default="tests/fixtures/vertex_only_gap.json")
    a = ap.parse_args()
    for ys in itertools.product(range(a.max_height + 1), repeat=5):
        if not general_position(ys):
            continue
        t = parse_terrain(list(enumerate(ys)))
        gs = min_vertex_cover(t)
        if gs != (0, 1, 3, 4):
            continue
        if verify_two_sided_continuous(t, gs).covered:
            continue
        rep = solve(t)
        if not rep.verified:
            continue
        doc = {**terrain_to_json(t), "vertex_only_guards": list(gs),
               "solver_guards": list(rep.guard_set.guards)}
        with open(a.out, "w") as fh:
            json.dump(doc, fh)
            fh.write("\n")
        print(json.dumps(doc))
        return
    print("no instance found")


if __name__ == "__main__":
    main()

"""Wall-clock timings of each pipeline stage over a range of terrain sizes.

The largest sizes skip the quadratic discretization and use two fixed
witnesses per edge (t = 1/3, 2/3) instead.
"""
import argparse
import time
from fractions import Fraction

from terrainguard import (GenSpec, boundary_points, build_witness_set, compute_all_extremes,
                          custom_witness_set, gen_terrain, left_guarding, right_guarding,
                          verify_two_sided_continuous)


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return time.perf_counter() - t0, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="250,500,1000,2000", help="full pipeline sizes")
    ap.add_argument("--big", default="10000,100000", help="fixed-witness sizes")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--verify", action="store_true", help="also time continuous verification")
    a = ap.parse_args()

    print(f"{'n':>7} {'|X|':>7} {'disc':>7} {'ext':>7} {'passes':>7} {'|S|':>6} "
          f"{'ext/|Q|':>8} {'vis/bd':>7} {'verify':>7}")
    rows = [(int(n), False) for n in a.sizes.split(",") if n] + [(int(n), True) for n in a.big.split(",") if n]
    for n, fixed in rows:
        t = gen_terrain(GenSpec(n, seed=a.seed))
        if fixed:
            dt_disc = float("nan")
            ws = custom_witness_set(t, [(k, Fraction(j, 3)) for k in range(t.n_edges) for j in (1, 2)])
        else:
            dt_disc, ws = timed(lambda: build_witness_set(t, "paper", boundary_points(t)))
        dt_ext, ext = timed(lambda: compute_all_extremes(t, ws))

        def passes():
            right = right_guarding(t, ws, ext, seed=(0, t.n - 1))
            left = left_guarding(t, ws, ext, seed=(0, *right.guards))
            return right, left

        dt_pass, (right, left) = timed(passes)
        guards = set(right.guards) | set(left.guards)
        q = t.n + len(ws)
        bound = 2 * len(ws) + t.n
        dt_ver = float("nan")
        if a.verify and not fixed:
            dt_ver, cert = timed(lambda: verify_two_sided_continuous(t, guards))
            assert cert.covered
        print(f"{n:>7} {len(ws):>7} {dt_disc:>7.2f} {dt_ext:>7.2f} {dt_pass:>7.2f} {len(guards):>6} "
              f"{max(ext.left_work, ext.right_work) / q:>8.3f} "
              f"{max(right.visits, left.visits) / bound:>7.3f} {dt_ver:>7.2f}")


if __name__ == "__main__":
    main()

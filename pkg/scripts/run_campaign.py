"""Randomized campaign: gen -> solve -> verify -> oracle, with counterexample shrinking.

Example:
    python scripts/run_campaign.py --count 500 --n-max 12 --jobs 4 --compare-modes
"""
import argparse
import json

from terrainguard.campaign import campaign, write_csv
from terrainguard.gen import PROFILES


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--n-min", type=int, default=3)
    ap.add_argument("--n-max", type=int, default=12)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--mode", choices=("paper", "dense"), default="paper")
    ap.add_argument("--max-n", type=int, default=12, help="oracle comparison only up to this n")
    ap.add_argument("--compare-modes", action="store_true")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--fixtures-dir", default="campaign-fixtures")
    ap.add_argument("--csv", default=None)
    a = ap.parse_args()

    s = campaign(a.count, (a.n_min, a.n_max), a.seed, a.mode, max_n=a.max_n,
                 compare_modes=a.compare_modes, profiles=PROFILES, jobs=a.jobs,
                 fixtures_dir=a.fixtures_dir)
    if a.csv:
        write_csv(s, a.csv)
    s.pop("instances")
    print(json.dumps(s, indent=2))
    print(f"feasible {s['feasible']}/{s['count']}, "
          f"oracle equal {s['oracle_equal']}/{s['oracle_compared']}, "
          f"modes equal {s['modes_equal']}/{s['modes_compared']}, "
          f"{len(s['counterexamples'])} counterexamples, {s['elapsed']:.1f}s")
    return 1 if s["counterexamples"] else 0


if __name__ == "__main__":
    raise SystemExit(main())

"""Run every verification law over a grid of (p, n) and print a timing table.

    python scripts/sweep_laws.py --trials 100 --seed 0
"""

import argparse

from frobjac.harness import SessionConfig, run_verification

GRID = {
    "prop2": [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1), (5, 2)],
    "lemma2": [(2, 1), (2, 2), (3, 1), (3, 2)],
    "lemma3": [(2, 2), (2, 3), (3, 2), (5, 1), (5, 2)],
    "lemma4": [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)],
    "prop1-blocks": [(2, 2), (3, 1), (3, 2), (5, 1)],
    "nousiainen": [(2, 1), (2, 2), (3, 1), (3, 2)],
    "prop3": [(2, 1), (2, 2), (3, 1), (3, 2)],
    "theorem-kf": [(2, 1), (2, 2), (3, 1), (3, 2)],
    "lemma1": [(5, 2), (7, 2), (5, 3)],
    "formula5": [(3, 1), (5, 1), (7, 1), (11, 1)],
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-degree", type=int, default=3)
    ap.add_argument("--max-terms", type=int, default=4)
    ap.add_argument("--law", choices=sorted(GRID), action="append")
    args = ap.parse_args()

    print(f"{'law':<14}{'p':>3}{'n':>3}{'pass':>10}{'seconds':>10}  tags")
    for law in args.law or GRID:
        for p, n in GRID[law]:
            cfg = SessionConfig(p=p, n=n, seed=args.seed, trials=args.trials,
                                max_degree=args.max_degree, max_terms=args.max_terms)
            r = run_verification(law, cfg)
            tags = ", ".join(f"{k}={v}" for k, v in r.tag_counts.items())
            print(f"{law:<14}{p:>3}{n:>3}{r.trials - r.failures:>6}/{r.trials:<4}{r.seconds:>9.2f}  {tags}")
            if not r.passed:
                print(f"    {r.first_counterexample}")


if __name__ == "__main__":
    main()

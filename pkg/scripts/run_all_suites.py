"""Run every verification suite at the sizes used for the exit criteria.

    python scripts/run_all_suites.py [--seed 42] [--scale 1.0] [--workers 1] [--json out.json]

``--scale`` multiplies every trial count, handy for a quick smoke run.
"""
import argparse
import json
import time

from ybx.verify import SuiteConfig, run_suite

PLAN = (
    [("qybe", n, 1, 1000) for n in range(2, 6)]
    + [("involution", n, 1, 1000) for n in range(1, 6)]
    + [("nondegeneracy", n, 1, 100) for n in range(1, 7)]
    + [("inverse-closed-form", n, 1, 100) for n in range(2, 7)]
    + [("cross-oracle", n, 1, 500) for n in range(2, 6)]
    + [("conjugation", n, N, 100) for N in (3, 4, 5) for n in (2, 3, 4)]
    + [("commute", n, m, 200) for n in range(2, 6) for m in range(2, 6)]
    + [("star-formulas", n, m, 200) for n in range(2, 5) for m in range(2, 5)]
    + [(s, n, 1, 50) for s in ("relation", "transpose") for n in range(2, 5)]
    + [("identity18", 3, 1, 1000), ("b-symmetry", 3, 1, 1000)]
    + [("phi-gamma", n, 1, 500) for n in range(2, 5)]
)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--bound", type=int, default=20)
    ap.add_argument("--scale", type=float, default=1.0)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--json", help="write all reports to this file")
    args = ap.parse_args()

    reports, failed = [], 0
    start = time.perf_counter()
    for suite, n, m, trials in PLAN:
        trials = max(1, round(trials * args.scale))
        cfg = SuiteConfig(suite, n=n, m=m, trials=trials, seed=args.seed, bound=args.bound,
                          workers=args.workers)
        r = run_suite(cfg)
        failed += not r.passed
        reports.append(r.to_dict())
        print(f"{'ok  ' if r.passed else 'FAIL'} {suite:20s} n={n} m={m} trials={trials:5d} "
              f"resampled={r.resampled:4d} {r.elapsed_ms / 1000:6.2f}s")
    print(f"{len(PLAN) - failed}/{len(PLAN)} runs clean in {time.perf_counter() - start:.1f}s")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(reports, fh, indent=1, ensure_ascii=False)
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()

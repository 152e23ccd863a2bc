#!/usr/bin/env python3
"""Run every verification suite and print a per-suite status summary.

Exit code 1 if any hard check fails; discrepancy-reported records are
findings and listed but do not fail the run.
"""

import argparse
import sys
from collections import Counter

from freecurve.verify import SUITES, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=None)
    ap.add_argument("--count", type=int, default=None)
    ap.add_argument("--suite", choices=sorted(SUITES), default=None,
                    help="run just one suite instead of all of them")
    args = ap.parse_args()

    names = [args.suite] if args.suite else sorted(SUITES)
    failed = False
    for name in names:
        records = run_suite(name, seed=args.seed, count=args.count)
        counts = Counter(r.status for r in records)
        print(f"{name}: {dict(sorted(counts.items()))}")
        for r in records:
            if r.status == "fail":
                failed = True
                print(f"  FAIL {r.semigroup} {r.check}: {r.payload}")
            elif r.status == "discrepancy-reported":
                print(f"  note {r.semigroup} {r.check}: {r.payload}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Full verification sweep over the standard grid, printed as a summary.

Runs every oracle (enumeration of both classes, both series coefficients,
bijection round trips for d >= 2) for n <= 28, k <= 6, d <= 4, m <= 8 and
prints aggregate statistics plus any failing points.

Usage: python3 scripts/run_full_grid.py [--n-max 28] [--json out.jsonl]
"""

import argparse
import json
import sys
import time

from parteq.cli import GridSpec, verify_point


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=28)
    ap.add_argument("--k-max", type=int, default=6)
    ap.add_argument("--d-max", type=int, default=4)
    ap.add_argument("--m-max", type=int, default=8)
    ap.add_argument("--budget", type=int, default=10_000_000)
    ap.add_argument("--json", type=str, default=None, help="write per-point records as JSON lines")
    args = ap.parse_args()

    grid = GridSpec(0, args.n_max, 1, args.k_max, 1, args.d_max, 1, args.m_max,
                    degree=max(60, args.n_max), budget=args.budget)
    cache = {}
    start = time.perf_counter()
    total = passed = 0
    failures = []
    sink = open(args.json, "w") if args.json else None
    for params in grid.points():
        report = verify_point(params, cache, grid.degree, grid.budget)
        total += 1
        if report.passed:
            passed += 1
        else:
            failures.append(report)
        if sink:
            sink.write(json.dumps(report.to_record(timing=True)) + "\n")
    if sink:
        sink.close()
    elapsed = time.perf_counter() - start

    print(f"grid points checked: {total}")
    print(f"passed:              {passed}")
    print(f"failed:              {len(failures)}")
    print(f"elapsed:             {elapsed:.1f}s")
    for report in failures[:20]:
        print("FAIL", report.to_record(timing=False))
    return 0 if not failures else 1


if __name__ == "__main__":
    sys.exit(main())

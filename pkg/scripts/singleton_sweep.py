"""Sweep seeded random codes and tabulate Singleton slack n - k - 2(d - 1).

    python scripts/singleton_sweep.py --p 2 3 --n-max 7 --draws 50

One row per (p, n, k): how many draws, the distances seen, the smallest
slack, and how many draws saturate the bound (slack 0).  Exits 1 if any
draw violates the bound or fails a lemma check.
"""

from __future__ import annotations

import argparse
import collections
import sys
import time

from qsingleton.code_generation import GeneratorConfig, random_code
from qsingleton.stabilizer_core import check_singleton


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--p", type=int, nargs="+", default=[2, 3])
    parser.add_argument("--n-max", type=int, default=6)
    parser.add_argument("--draws", type=int, default=40, help="codes per (p, n, k)")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    start = time.perf_counter()
    failures = 0
    print(f"{'p':>3} {'n':>3} {'k':>3} {'draws':>6} {'distances':<16} {'min slack':>9} {'saturating':>10}")
    for p in args.p:
        for n in range(1, args.n_max + 1):
            for k in range(1, n + 1):
                ds: collections.Counter[int] = collections.Counter()
                slacks = []
                for i in range(args.draws):
                    seed = args.seed + 1_000_003 * n + 1009 * k + i
                    report = check_singleton(random_code(GeneratorConfig(p, n, k, seed)))
                    failures += not report.passed or report.slack < 0
                    ds[report.d] += 1
                    slacks.append(report.slack)
                dist = ",".join(f"{d}:{c}" for d, c in sorted(ds.items()))
                row = f"{p:>3} {n:>3} {k:>3} {args.draws:>6} {dist:<16}"
                print(f"{row} {min(slacks):>9} {slacks.count(0):>10}")
    print(f"# {failures} failures, {time.perf_counter() - start:.1f}s", file=sys.stderr)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

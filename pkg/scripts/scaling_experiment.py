"""Time stab_fpt on planted unit-square instances while doubling the object count."""

from __future__ import annotations

import argparse
import csv
import statistics
import sys
import time

from stabbing.generators import planted_square_instance
from stabbing.solver import stab_fpt


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--start", type=int, default=250)
    ap.add_argument("--doublings", type=int, default=5)
    ap.add_argument("--runs", type=int, default=5)
    args = ap.parse_args()

    out = csv.writer(sys.stdout)
    out.writerow(["k", "n", "median_s", "ratio", "nodes"])
    for k in args.k:
        prev = None
        for step in range(args.doublings):
            n = args.start * 2**step
            times, nodes = [], 0
            for seed in range(args.runs):
                inst = planted_square_instance(seed, n, k)
                t0 = time.perf_counter()
                res = stab_fpt(inst)
                times.append(time.perf_counter() - t0)
                nodes = max(nodes, res.stats.nodes)
                assert res.yes, "planted instance must be solvable"
            med = statistics.median(times)
            ratio = "" if prev is None else f"{med / prev:.2f}"
            out.writerow([k, n, f"{med:.4f}", ratio, nodes])
            prev = med


if __name__ == "__main__":
    main()

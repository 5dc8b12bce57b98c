#!/usr/bin/env python3
"""Run every constructive planner across its family and count verifier
verdicts: paths, cycles, spiders, and grids.

Usage: python scripts/planner_sweep.py [--max-path 60] [--max-grid 12]
                                       [--max-legs 6] [--max-leg-len 8]
"""

import argparse
import time
from itertools import combinations_with_replacement

from cupstack.families import (cycle_graph, grid_graph, path_graph,
                               plan_cycle, plan_grid, plan_path, plan_spider,
                               spider_graph)
from cupstack.graphs import verify_plan


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-path", type=int, default=60)
    ap.add_argument("--max-grid", type=int, default=12)
    ap.add_argument("--max-legs", type=int, default=6)
    ap.add_argument("--max-leg-len", type=int, default=8)
    args = ap.parse_args()

    t0 = time.time()
    counts = {}

    n_ok = n_all = 0
    for n in range(1, args.max_path + 1):
        g = path_graph(n)
        for r in range(n):
            n_all += 1
            n_ok += bool(verify_plan(g, plan_path(n, r)))
    counts["paths"] = (n_ok, n_all)

    n_ok = n_all = 0
    for n in range(3, args.max_path + 1):
        g = cycle_graph(n)
        for r in range(n):
            n_all += 1
            n_ok += bool(verify_plan(g, plan_cycle(n, r)))
    counts["cycles"] = (n_ok, n_all)

    n_ok = n_all = 0
    for k in range(1, args.max_legs + 1):
        for legs in combinations_with_replacement(
                range(1, args.max_leg_len + 1), k):
            n_all += 1
            n_ok += bool(verify_plan(spider_graph(legs), plan_spider(legs)))
    counts["spiders"] = (n_ok, n_all)

    n_ok = n_all = 0
    for m in range(1, args.max_grid + 1):
        for k in range(1, args.max_grid + 1):
            g = grid_graph(m, k)
            for x in range(m):
                for y in range(k):
                    n_all += 1
                    n_ok += bool(verify_plan(g, plan_grid(m, k, (x, y))))
    counts["grids"] = (n_ok, n_all)

    for family, (ok, total) in counts.items():
        print(f"{family:>8}: {ok}/{total} plans accepted")
    print(f"total {time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()

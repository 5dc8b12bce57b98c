#!/usr/bin/env python3
"""Plan every hypercube dimension in range and tabulate the results.

Usage: python scripts/cube_report.py [--max-d 20] [--verify]
"""

import argparse
import time

from cupstack.cube import plan_cube, verify_cube_plan


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-d", type=int, default=20)
    ap.add_argument("--verify", action="store_true",
                    help="replay every plan through the verifier")
    args = ap.parse_args()

    header = f"{'d':>3} {'moves':>8} {'complete':>9} {'unassigned':>11} {'plan_s':>7}"
    if args.verify:
        header += f" {'verified':>9} {'verify_s':>9}"
    print(header)
    for d in range(args.max_d + 1):
        t0 = time.time()
        res = plan_cube(d)
        t_plan = time.time() - t0
        row = (f"{d:>3} {len(res.plan.moves):>8} {str(res.complete):>9} "
               f"{len(res.unassigned):>11} {t_plan:>7.2f}")
        if args.verify:
            t0 = time.time()
            ok = verify_cube_plan(res)
            row += f" {str(ok):>9} {time.time() - t0:>9.2f}"
        print(row)
        if res.unassigned:
            levels = sorted({m.bit_count() for m in res.unassigned})
            print(f"    gap: {len(res.unassigned)} 3-cube labels at "
                  f"levels {levels} have no chain partners")


if __name__ == "__main__":
    main()

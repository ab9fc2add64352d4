#!/usr/bin/env python3
"""Classify every family pair on a parameter grid and tabulate the result.

Each row gives the canonical line and parameters, |K| for the reduction and
every other line the pair also matches.
"""

import argparse
import sys
import time

from og4kit.classify import classify_independent
from og4kit.errors import Og4Error
from og4kit.families import FamilySpec

BUILDS = [("gamma", "G", "con1"), ("gamma", "H", "con2c"), ("gamma-plus", "G", "con1"),
          ("gamma-plus", "H", "con2c"), ("double", "G", "con2a")]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=6, help="largest r and s (default %(default)s)")
    args = ap.parse_args()

    print(f"{'family':<18} {'r':>2} {'s':>2} {'line':>4} {'params':>8} {'|K|':>4} {'sec':>6}  also")
    for family, group, orient in BUILDS:
        for r in range(3, args.max + 1):
            for s in range(3, args.max + 1):
                try:
                    pair = FamilySpec(family, r, s, group, orient).build()
                except Og4Error:
                    continue
                t0 = time.perf_counter()
                rep = classify_independent(pair)
                others = sorted({(m.line, m.r, m.s) for m in rep.matches[1:]})
                print(f"{family + '/' + group:<18} {r:>2} {s:>2} {rep.table_line:>4} "
                      f"{str(rep.parameters):>8} {rep.reduction.K.order:>4} "
                      f"{time.perf_counter() - t0:>6.2f}  {others}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

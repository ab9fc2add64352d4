#!/usr/bin/env python3
"""Cyclic normal quotient census over a grid of family parameters, as CSV."""

import argparse
import sys

from og4kit.errors import Og4Error
from og4kit.families import FamilySpec
from og4kit.io import census_csv
from og4kit.quotient import cyclic_quotient_census, distinct_quotients


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--family", default="gamma", choices=("gamma", "gamma-plus", "double"))
    ap.add_argument("--group", default="G", choices=("G", "H"))
    ap.add_argument("--orient", default="con1", choices=("con1", "con2c"))
    ap.add_argument("--min", type=int, default=3)
    ap.add_argument("--max", type=int, default=6)
    ap.add_argument("--all", action="store_true", help="one row per normal subgroup")
    args = ap.parse_args()

    header = True
    for r in range(args.min, args.max + 1):
        for s in range(args.min, args.max + 1):
            try:
                pair = FamilySpec(args.family, r, s, args.group, args.orient).build()
            except Og4Error:
                continue
            rows = cyclic_quotient_census(pair)
            if not args.all:
                rows = distinct_quotients(rows)
            text = census_csv(rows, args.family, r, s)
            sys.stdout.write(text if header else text.split("\n", 1)[1])
            header = False
    return 0


if __name__ == "__main__":
    sys.exit(main())

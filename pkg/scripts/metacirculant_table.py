#!/usr/bin/env python3
"""Weak metacirculant descriptions of the two oriented lines on a small grid."""

import argparse
import sys

from og4kit.errors import BadParam
from og4kit.metacirc import verify_corollary_wm


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=8)
    args = ap.parse_args()
    print(f"{'line':>4} {'r':>2} {'s':>2} {'(m, n)':>8} {'metacirculant':>13}  name")
    for line in (1, 2):
        for r in range(3, args.max + 1):
            for s in range(3, args.max + 1):
                try:
                    rep = verify_corollary_wm(r, s, line)
                except BadParam:
                    continue
                print(f"{line:>4} {r:>2} {s:>2} {str((rep.m, rep.n)):>8} "
                      f"{'yes' if rep.meta.is_metacirculant else 'no':>13}  {rep.name}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

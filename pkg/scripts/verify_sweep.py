#!/usr/bin/env python3
"""Compare the closed-form index with the shell oracle over label boxes.

    python3 scripts/verify_sweep.py A1 A2 A3 B2 G2 --box 3
"""

import argparse
import time

from bwbdirac.index import bwb_index, label_box, oracle_index
from bwbdirac.rootsys import parse_type


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("types", nargs="+")
    ap.add_argument("--box", type=int, default=3)
    args = ap.parse_args()

    failures = 0
    for label in args.types:
        rs = parse_type(label)
        start = time.perf_counter()
        bad = [mu for mu in label_box(rs.rank, args.box)
               if bwb_index(rs, mu) != oracle_index(rs, mu)]
        n = (2 * args.box + 1) ** rs.rank
        print(f"{rs.name:4s} {n:6d} weights  {len(bad):3d} mismatches  "
              f"{time.perf_counter() - start:7.2f}s")
        for mu in bad:
            print(f"    mu={mu}")
        failures += len(bad)
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Tabulate the truncated supertrace of exp(-tD^2) against t.

    python3 scripts/supertrace_table.py A2 --mu=-2,1 --theta 0.3,0.9
"""

import argparse

from bwbdirac.charring import evaluate_at_torus, freudenthal_multiplicities
from bwbdirac.index import bwb_index
from bwbdirac.mckean import t_independence_report
from bwbdirac.rootsys import inner, parse_type, parse_weight


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("type")
    ap.add_argument("--mu", required=True, help="Dynkin labels, e.g. --mu=-2,1")
    ap.add_argument("--theta", required=True, help="comma-separated torus angles")
    ap.add_argument("--ts", default="0.01,0.1,1,10,100")
    ap.add_argument("--extra", type=int, default=10)
    args = ap.parse_args()

    rs = parse_type(args.type)
    mu = parse_weight(args.mu, rs.rank)
    theta = [float(x) for x in args.theta.split(",")]
    ts = [float(x) for x in args.ts.split(",")]
    r2 = inner(rs, mu + rs.rho, mu + rs.rho)
    rep = t_independence_report(rs, mu, theta, ts, r2 + args.extra)

    res = bwb_index(rs, mu)
    target = 0.0 if res.zero else \
        res.sign * evaluate_at_torus(freudenthal_multiplicities(rs, res.lam), theta)
    print(f"index: {res}")
    print(f"{'t':>10s}  {'Re':>22s}  {'Im':>10s}")
    for row in rep.rows():
        print(f"{row['t']:10g}  {row['value_re']:22.15f}  {row['value_im']:10.2e}")
    print(f"character value {complex(target).real:.15f}, max rel dev {rep.max_rel_dev:.2e}")


if __name__ == "__main__":
    main()

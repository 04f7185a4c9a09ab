#!/usr/bin/env python3
"""Print the invariant blocks of the cubic Dirac operator for one weight.

For every lambda in the ball |lambda+rho|^2 <= |mu+rho|^2 + extra this lists the block
size, the scalar D^2 should equal, the measured deviation and the spectrum of D.

    python3 scripts/dirac_spectrum.py A2 --mu=-2,1 --extra 6
"""

import argparse

import numpy as np

from bwbdirac.diracmat import cubic_dirac_matrix, kernel_report
from bwbdirac.rootsys import inner, parse_type, parse_weight


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("type")
    ap.add_argument("--mu", required=True, help="Dynkin labels, e.g. --mu=-2,1")
    ap.add_argument("--extra", type=int, default=4, help="widen the radius beyond the shell")
    args = ap.parse_args()

    rs = parse_type(args.type)
    mu = parse_weight(args.mu, rs.rank)
    r2 = inner(rs, mu + rs.rho, mu + rs.rho)
    print(f"{rs.name}  mu={mu}  |mu+rho|^2={r2}")
    for e in kernel_report(rs, mu, radius_sq=r2 + args.extra):
        blk = cubic_dirac_matrix(rs, e.lam, mu)
        eig = np.sort(np.linalg.eigvalsh(blk.D)) if blk.space_dim else np.array([])
        spec = " ".join(f"{x:+.4f}" for x in eig)
        tag = f"kernel {e.kernel_dim} ({e.parity}, degrees {list(e.degrees)})" \
            if e.kernel_dim else ""
        print(f"  lambda={str(e.lam):10s} dim {e.space_dim:3d} "
              f"(+{e.even_dim}/-{e.odd_dim})  D^2={str(e.scalar):6s} "
              f"dev {e.max_dev:.1e}  {tag}")
        if spec:
            print(f"      spectrum: {spec}")


if __name__ == "__main__":
    main()

"""Equimodular points and zero accumulation for the ring families.

Scans a few target points with the I_s^+ relation and with its mirror, then
prints nearest-zero distances for the paper_relation(1) and twist_ring(3)
presets.

    python3 scripts/bkw_experiment.py --s-max 40
"""

import argparse

from jonesone.bkw import (
    NoEquimodularPointFound,
    find_equimodular_near,
    jw_zero_accumulation,
    paper_relation,
    twist_ring,
)
from jonesone.cli import int_list, parse_complex

# a dominant equimodular point of twist_ring(3), found by bisection on |L1| - |L2|
TWIST3_POINT = 0.02 - 0.8788920644743994j


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--t0", type=parse_complex, nargs="*", default=[1.5 + 0.5j, -0.5 + 1.2j, 2 + 2j, 1j])
    ap.add_argument("--eps", type=float, default=0.5)
    ap.add_argument("--s-max", type=int, default=40)
    ap.add_argument("--n", type=int_list, default=[10, 30, 50, 100, 150])
    args = ap.parse_args()

    print("t0, relation, s, t_star, |t_star - t0|, dominant")
    for t0 in args.t0:
        for mirror in (False, True):
            tag = "mirror" if mirror else "I_s^+"
            try:
                pt = find_equimodular_near(t0, args.eps, args.s_max, mirror=mirror)
                print(f"{t0}, {tag}, {pt.s}, {pt.t_star:.6f}, {abs(pt.t_star - t0):.4f}, {pt.dominant}")
            except NoEquimodularPointFound:
                print(f"{t0}, {tag}, none up to s = {args.s_max}")

    for fam, t_star in ((paper_relation(1), 1j), (twist_ring(3), TWIST3_POINT)):
        print(f"\n{fam.provenance} at t* = {t_star:.6f}")
        for row in jw_zero_accumulation(fam, t_star, args.n, 0.2):
            print(f"  n = {row.n:4d}  zero = {row.nearest_zero:.8f}  distance = {row.distance:.3e}")


if __name__ == "__main__":
    main()

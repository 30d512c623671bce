#!/usr/bin/env python3
"""Dump every parametric corollary curve as plot-ready CSV.

One row per (curve, grid point): the closed-form published value, the
theorem value, the attainment value, and the applicability flag.  All
three value columns should agree to ~1e-15 wherever applicable.

    python3 scripts/sweep_corollaries.py [--points N] > curves.csv
"""

import argparse

from toepsharp.bounds import theorem_bound
from toepsharp.catalog import COROLLARY_CURVES
from toepsharp.extremal import attainment


def run(points: int) -> None:
    print("label,functional,param,value,published,theorem,attained,applicable")
    for c in COROLLARY_CURVES:
        for k in range(points):
            x = c.lo + (c.hi - c.lo) * k / (points - 1)
            phi = c.phi_of(x)
            rep = theorem_bound(c.functional, c.class_kind, phi)
            att = attainment(c.functional, c.class_kind, phi)
            print(f"{c.label},{c.functional.value},{c.param},{x!r},"
                  f"{float(c.expected(x))!r},{float(rep.bound)!r},{att!r},"
                  f"{str(rep.applicable).lower()}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--points", type=int, default=50)
    args = p.parse_args()
    run(args.points)

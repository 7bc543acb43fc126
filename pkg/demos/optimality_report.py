#!/usr/bin/env python3
"""Judge a family against the standard optimality benchmarks."""

import argparse

from cyclofhs import FhsParams, lempel_greenberg_bound, optimality_report, peng_fan_bounds


def show(p, n):
    params = FhsParams(p=p, n=n)
    rep = optimality_report(params)
    nu, m, M = params.nu, params.m, params.M
    print(f"p={p}, n={n}  (nu={nu}, m={m}, M={M})")
    print(f"  single-sequence bound:      {lempel_greenberg_bound(nu, m)}")
    print(f"  per-sequence max auto:      {rep.per_sequence_max}")
    print(f"  bound attained:             {rep.lempel_greenberg_attained}")
    first, second = peng_fan_bounds(nu, m, M)
    print(f"  family bounds:              {first}, {second}")
    print(f"  family max (auto + cross):  {rep.family_max}")
    print(f"  max cross alone:            {rep.max_cross}")
    print(f"  family bound met:           {rep.peng_fan_optimal}")
    print(f"  average auto:               {rep.auto_average}")
    print(f"  average cross:              {rep.cross_average}")
    # the average benchmark is an exact rational identity, no rounding
    verdict = "equality" if rep.ah_optimal else f"{rep.ah_lhs} vs {rep.ah_rhs}"
    print(f"  average benchmark:          {verdict}")
    print(f"  uniform symbol usage:       {rep.uniform}")
    print()


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, action="append", help="repeatable; default 3 5 7")
    ap.add_argument("--n", type=int, default=2)
    args = ap.parse_args()
    for p in args.p or [3, 5, 7]:
        show(p, args.n)


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Print Hamming correlation tables, brute force next to closed form.

Usage:
    python3 demos/correlation_tables.py
    python3 demos/correlation_tables.py --p 7 --n 2 --delta 3
"""

import argparse
import sys

from cyclofhs import (
    FhsParams,
    autocorrelation_closed,
    build_family,
    correlation_table,
    crosscorrelation_closed,
)


def print_auto(params, family):
    table = correlation_table(family, 0, 0)
    print(f"autocorrelation of X_0 (identical for every sequence), nu = {params.nu}")
    print(f"{'tau':>5} {'brute':>7} {'closed':>7}")
    for tau in range(params.nu):
        if tau == 0:
            closed = params.nu  # zero shift matches everywhere
        else:
            closed = autocorrelation_closed(params, tau).value
        mark = "" if closed == int(table.values[tau]) else "   <- MISMATCH"
        print(f"{tau:>5} {int(table.values[tau]):>7} {closed:>7}{mark}")


def print_cross(params, family, delta):
    table = correlation_table(family, 0, delta)
    print(f"\ncross-correlation of (X_0, X_{delta})")
    print(f"{'tau':>5} {'brute':>7} {'closed':>9}  rule")
    for tau in range(params.nu):
        verdict = crosscorrelation_closed(params, delta, tau)
        if verdict.covered:
            closed = str(verdict.value)
            mark = "" if verdict.value == int(table.values[tau]) else "   <- MISMATCH"
        else:
            closed = "-"
            mark = "   (no closed form for this residue class)"
        print(f"{tau:>5} {int(table.values[tau]):>7} {closed:>9}  {verdict.rule or ''}{mark}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--delta", type=int, default=1, help="index gap for the cross table")
    args = ap.parse_args()

    params = FhsParams(p=args.p, n=args.n)
    if not 1 <= args.delta < params.M:
        print(f"delta must be in [1, {params.M - 1}]", file=sys.stderr)
        return 2
    family = build_family(params)
    print_auto(params, family)
    print_cross(params, family, args.delta)
    return 0


if __name__ == "__main__":
    sys.exit(main())

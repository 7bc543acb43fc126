"""Optimality certification against classical Hamming-correlation bounds.

All arithmetic is exact: bound values are integers obtained by ceiling
exact rationals, and the average-correlation identity is checked with
rational numbers, never floats.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomy import FhsParams
from .correlation import CorrelationTable, family_tables
from .fhs import build_family, is_uniformly_distributed

# Exact rational values; reduced form and exact arithmetic come with the type.
ExactRational = Fraction


def lempel_greenberg_bound(nu: int, m: int) -> int:
    """Single-sequence floor on the peak autocorrelation.

    ceil((nu - b)(nu + b - m) / (m (nu - 1))) with b = nu mod m.  Agrees
    with the floor(nu/m) check form for every admissible (nu, m); that
    relation is asserted here.
    """
    if nu < 2:
        raise ValueError(f"sequence length must be >= 2, got {nu}")
    if m < 1:
        raise ValueError(f"alphabet size must be >= 1, got {m}")
    b = nu % m
    value = math.ceil(Fraction((nu - b) * (nu + b - m), m * (nu - 1)))
    check = lempel_greenberg_floor(nu, m)
    if value != check:
        raise AssertionError(
            f"bound forms disagree at nu={nu}, m={m}: {value} vs {check}"
        )
    return value


def lempel_greenberg_floor(nu: int, m: int) -> int:
    """Check form of the same bound: floor(nu/m), except 0 when nu = m."""
    if nu < 2:
        raise ValueError(f"sequence length must be >= 2, got {nu}")
    if m < 1:
        raise ValueError(f"alphabet size must be >= 1, got {m}")
    return 0 if nu == m else nu // m


def peng_fan_bounds(nu: int, M: int, m: int) -> tuple[int, int]:
    """Pair of family-wide floors on the peak Hamming correlation.

    First: ceil((nu M - m) nu / ((nu M - 1) m)).  Second, with
    I = floor(nu M / m): ceil((2 I nu M - (I + 1) I M) / ((nu M - 1) M)).
    """
    if nu < 2 or M < 1 or m < 1:
        raise ValueError(f"bad family shape: nu={nu}, M={M}, m={m}")
    first = math.ceil(Fraction((nu * M - m) * nu, (nu * M - 1) * m))
    capacity = nu * M // m
    second = math.ceil(
        Fraction(
            2 * capacity * nu * M - (capacity + 1) * capacity * M,
            (nu * M - 1) * M,
        )
    )
    return first, second


@dataclass(frozen=True)
class MaxCorrelations:
    """Peak Hamming correlations: per sequence (tau >= 1), per unordered
    pair (all tau), and the family-wide maximum of both."""

    per_sequence: tuple[int, ...]
    per_pair: dict[tuple[int, int], int]
    family_max: int


def max_correlations(tables: dict[tuple[int, int], CorrelationTable]) -> MaxCorrelations:
    per_sequence = []
    per_pair = {}
    for (i, j), table in sorted(tables.items()):
        if i == j:
            per_sequence.append(int(table.values[1:].max()))
        else:
            per_pair[(i, j)] = int(table.values.max())
    overall = max(max(per_sequence), max(per_pair.values()))
    return MaxCorrelations(
        per_sequence=tuple(per_sequence), per_pair=per_pair, family_max=overall
    )


@dataclass(frozen=True)
class AverageCorrelations:
    """Totals and averages of the Hamming correlation over the family.

    The auto total leaves out tau = 0: those nu trivial coincidences per
    sequence carry no hopping information and the average is defined
    over the nu - 1 proper shifts.  The cross total includes tau = 0.
    """

    auto_total: int
    cross_total: int
    auto_average: Fraction
    cross_average: Fraction


def average_correlations(
    params: FhsParams, tables: dict[tuple[int, int], CorrelationTable]
) -> AverageCorrelations:
    nu, M = params.nu, params.M
    auto_total = 0
    cross_total = 0
    for (i, j), table in tables.items():
        if i == j:
            auto_total += int(table.values[1:].sum())
        else:
            cross_total += int(table.values.sum())
    return AverageCorrelations(
        auto_total=auto_total,
        cross_total=cross_total,
        auto_average=Fraction(auto_total, M * (nu - 1)),
        cross_average=Fraction(2 * cross_total, nu * M * (M - 1)),
    )


def ah_optimality_check(
    params: FhsParams, averages: AverageCorrelations
) -> tuple[Fraction, Fraction, bool]:
    """Both sides of the average-Hamming bound and whether they are equal.

    lhs = A_a / (nu (M - 1)) + A_c / (nu - 1) >= rhs always; equality is
    the optimality criterion.
    """
    nu, M, m = params.nu, params.M, params.m
    lhs = averages.auto_average / (nu * (M - 1)) + averages.cross_average / (nu - 1)
    rhs = Fraction(nu * M - m, m * (nu - 1) * (M - 1))
    return lhs, rhs, lhs == rhs


@dataclass(frozen=True)
class OptimalityReport:
    """Everything the bounds say about one family, computed exactly."""

    params: FhsParams
    lempel_greenberg: int
    lempel_greenberg_check_form: int
    per_sequence_max: tuple[int, ...]
    lempel_greenberg_attained: tuple[bool, ...]
    peng_fan: tuple[int, int]
    family_max: int
    max_cross: int
    peng_fan_optimal: bool
    auto_total: int
    cross_total: int
    auto_average: Fraction
    cross_average: Fraction
    ah_lhs: Fraction
    ah_rhs: Fraction
    ah_optimal: bool
    uniform: bool
    symbol_totals: dict[int, int]


def optimality_report(
    params: FhsParams,
    tables: dict[tuple[int, int], CorrelationTable] | None = None,
) -> OptimalityReport:
    family = build_family(params)
    if tables is None:
        tables = family_tables(family)
    peaks = max_correlations(tables)
    averages = average_correlations(params, tables)
    lg = lempel_greenberg_bound(params.nu, params.m)
    pf = peng_fan_bounds(params.nu, params.M, params.m)
    lhs, rhs, ah_equal = ah_optimality_check(params, averages)
    uniform, totals = is_uniformly_distributed(family)
    if ah_equal != uniform:
        raise AssertionError(
            "uniform distribution and average-bound equality must coincide"
        )
    return OptimalityReport(
        params=params,
        lempel_greenberg=lg,
        lempel_greenberg_check_form=lempel_greenberg_floor(params.nu, params.m),
        per_sequence_max=peaks.per_sequence,
        lempel_greenberg_attained=tuple(h == lg for h in peaks.per_sequence),
        peng_fan=pf,
        family_max=peaks.family_max,
        max_cross=max(peaks.per_pair.values()),
        peng_fan_optimal=peaks.family_max in pf,
        auto_total=averages.auto_total,
        cross_total=averages.cross_total,
        auto_average=averages.auto_average,
        cross_average=averages.cross_average,
        ah_lhs=lhs,
        ah_rhs=rhs,
        ah_optimal=ah_equal,
        uniform=uniform,
        symbol_totals=totals,
    )

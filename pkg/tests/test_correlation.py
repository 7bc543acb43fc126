"""Hamming correlation: brute-force oracle, closed forms, arbitration."""

import pytest

from cyclofhs.correlation import (
    autocorrelation_closed,
    correlation_table,
    crosscorrelation_closed,
    family_tables,
    hamming_correlation,
    verify_closed_forms,
)
from cyclofhs.cyclotomy import FhsParams, classify
from cyclofhs.fhs import build_family

P3N2 = FhsParams(p=3, n=2)


def test_hamming_correlation_hand_counts():
    family = build_family(P3N2)
    # shifting [0,2,3,0,2,3,1,2,3] by 3 realigns all positions except
    # the two where class 0 and class 1 labels trade places
    assert hamming_correlation(family[0], family[0], 3) == 7
    assert hamming_correlation(family[0], family[1], 0) == 0
    assert hamming_correlation(family[0], family[1], 2) == 6
    assert hamming_correlation(family[0], family[1], 3) == 1


def test_hamming_correlation_validation():
    family = build_family(P3N2)
    other = build_family(FhsParams(p=5, n=2))
    with pytest.raises(ValueError):
        hamming_correlation(family[0], other[0], 1)
    with pytest.raises(ValueError):
        hamming_correlation(family[0], family[0], 9)


def test_frozen_auto_table():
    table = correlation_table(build_family(P3N2), 0, 0)
    assert table.values.tolist() == [9, 0, 0, 7, 0, 0, 7, 0, 0]
    assert table.kind == "auto"


def test_frozen_cross_table_gap_one():
    table = correlation_table(build_family(P3N2), 0, 1)
    assert table.values.tolist() == [0, 0, 6, 1, 0, 6, 1, 0, 6]
    assert table.kind == "cross"


def test_family_tables_covers_every_unordered_pair():
    tables = family_tables(build_family(P3N2))
    assert sorted(tables) == [(i, j) for i in range(4) for j in range(i, 4)]


def test_autocorrelation_closed_rejects_identity_shift():
    with pytest.raises(ValueError):
        autocorrelation_closed(P3N2, 0)


def test_autocorrelation_closed_spot_values():
    assert autocorrelation_closed(P3N2, 3).value == 7
    assert autocorrelation_closed(FhsParams(p=3, n=3), 9).value == 25


@pytest.mark.parametrize("p,n", [(3, 3), (5, 2), (13, 2)])
def test_autocorrelation_closed_equals_brute(p, n):
    params = FhsParams(p=p, n=n)
    table = correlation_table(build_family(params), 0, 0)
    for tau in range(1, params.nu):
        assert autocorrelation_closed(params, tau).value == int(table.values[tau])


def test_crosscorrelation_not_covered_for_residue_one():
    params = FhsParams(p=5, n=2)
    for tau in (0, 1, 7):
        verdict = crosscorrelation_closed(params, 1, tau)
        assert not verdict.covered
        assert verdict.value is None


def test_crosscorrelation_closed_spot_values():
    assert crosscorrelation_closed(P3N2, 1, 0).value == 0
    assert crosscorrelation_closed(P3N2, 1, 3).value == 1
    assert crosscorrelation_closed(P3N2, 1, 2).value == 6


def test_crosscorrelation_argument_validation():
    with pytest.raises(ValueError):
        crosscorrelation_closed(P3N2, 0, 1)
    with pytest.raises(ValueError):
        crosscorrelation_closed(P3N2, 4, 1)
    with pytest.raises(ValueError):
        crosscorrelation_closed(P3N2, 1, 9)


@pytest.mark.parametrize("p,n", [(3, 2), (3, 3), (7, 2), (5, 2), (3, 4)])
def test_verify_closed_forms_finds_no_discrepancies(p, n):
    assert verify_closed_forms(FhsParams(p=p, n=n)) == []


def test_correlation_symmetry_under_shift_reversal():
    params = FhsParams(p=3, n=2)
    family = build_family(params)
    for i in range(4):
        for j in range(4):
            for tau in range(params.nu):
                assert hamming_correlation(family[i], family[j], tau) == hamming_correlation(
                    family[j], family[i], (params.nu - tau) % params.nu
                )


def test_rejected_tail_variant_disagrees_with_bruteforce():
    # odd gap with 2*dp > n + 2: arbitration replaced a p^(k-dp) tail
    # term with p^(k-dp-1).  On every shift where that line applies the
    # rejected variant misses the count and the shipped form hits it.
    params = FhsParams(p=3, n=5)
    family = build_family(params)
    delta = 7  # dp = 4, so 2*dp = 8 > n + 2 = 7
    dp, eps = 4, 2  # eps = n - dp + 1
    table = correlation_table(family, 0, delta)
    p = params.p
    applicable = rejected_hits = shipped_hits = 0
    for tau in range(1, params.nu):
        c = classify(tau, params)
        if c.level > dp and c.parity == 1:
            applicable += 1
            brute = int(table.values[tau])
            rejected = (p - 1) * (p ** (c.level - dp) + p ** (c.level - eps)) // 2
            shipped = crosscorrelation_closed(params, delta, tau).value
            rejected_hits += rejected == brute
            shipped_hits += shipped == brute
    assert applicable == 81
    assert shipped_hits == 81
    assert rejected_hits == 0

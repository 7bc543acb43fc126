"""Class structure, cyclotomic pair counts and difference functions.

Brute-force enumeration is the oracle everywhere; closed forms are
asserted equal to it, never the other way around.
"""

import pytest

from cyclofhs.cyclotomy import (
    FhsParams,
    class_id,
    class_index_array,
    class_members,
    classify,
    cyclotomic_number_bruteforce,
    cyclotomic_number_closed,
    delta_lk,
    delta_lk_table_bruteforce,
    delta_star,
    fit_mixed_pair_constant,
    generator_class_members,
    unit_class_members,
    unit_class_size,
)

P3N2 = FhsParams(p=3, n=2)


def test_params_validation():
    for bad_p in (2, 4, 9, 15):
        with pytest.raises(ValueError):
            FhsParams(p=bad_p, n=2)
    with pytest.raises(ValueError):
        FhsParams(p=3, n=1)
    with pytest.raises(ValueError):
        FhsParams(p=3, n=20)  # 3^20 exceeds the length cap


def test_params_shape():
    assert (P3N2.nu, P3N2.m, P3N2.M) == (9, 4, 4)
    params = FhsParams(p=7, n=3)
    assert (params.nu, params.m, params.M) == (343, 6, 6)


def test_classes_mod_nine():
    # units mod 9 split by the powers of 2: even powers {1,4,7}, odd
    # {2,5,8}; the scaled level-1 classes are {3} and {6}; 0 rides with
    # the first class
    assert class_members(class_id(0, P3N2), P3N2) == [0, 3]
    assert class_members(class_id(1, P3N2), P3N2) == [6]
    assert class_members(class_id(2, P3N2), P3N2) == [1, 4, 7]
    assert class_members(class_id(3, P3N2), P3N2) == [2, 5, 8]


def test_classify_zero_is_flagged():
    c = classify(0, P3N2)
    assert c.is_zero
    assert c.index == 0


def test_classify_range_check():
    with pytest.raises(ValueError):
        classify(9, P3N2)
    with pytest.raises(ValueError):
        classify(-1, P3N2)


@pytest.mark.parametrize("p,n", [(3, 2), (3, 3), (5, 2), (7, 2)])
def test_index_array_matches_elementwise_classification(p, n):
    params = FhsParams(p=p, n=n)
    idx = class_index_array(params)
    assert [classify(t, params).index for t in range(params.nu)] == idx.tolist()


def test_unit_class_sizes():
    params = FhsParams(p=5, n=3)
    for level in (1, 2, 3):
        expected = (5**level - 5 ** (level - 1)) // 2
        assert unit_class_size(level, params) == expected
        for parity in (0, 1):
            assert len(unit_class_members(parity, level, params)) == expected


@pytest.mark.parametrize("p,n", [(3, 3), (7, 2), (5, 2)])
def test_generator_route_matches_classification_route(p, n):
    params = FhsParams(p=p, n=n)
    for level in range(1, n + 1):
        for parity in (0, 1):
            assert generator_class_members(parity, level, params) == unit_class_members(
                parity, level, params
            )


def test_cyclotomic_bruteforce_hand_counts():
    # squares mod 9 are {1,4,7}; all three successors 2, 5, 8 are
    # non-squares, so the mixed count is 3
    assert cyclotomic_number_bruteforce(0, 1, 3, 2) == 3
    # squares mod 5 are {1,4}; 1+1=2 is a non-square and 4+1=5 is not a
    # unit, so the square-square count is 0
    assert cyclotomic_number_bruteforce(0, 0, 5, 1) == 0
    # squares mod 7 are {1,2,4}; of the successors only 3 and 5 are
    # non-squares (2 is a square)
    assert cyclotomic_number_bruteforce(0, 1, 7, 1) == 2


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_cyclotomic_closed_matches_bruteforce(p):
    for k in (1, 2):
        for i in (0, 1):
            for j in (0, 1):
                assert cyclotomic_number_closed(i, j, p, k) == cyclotomic_number_bruteforce(
                    i, j, p, k
                )


def test_mixed_pair_constant_was_arbitrated():
    # a (p-1)/4 mixed-pair constant is not even an integer when
    # p = 3 mod 4; the arbitrated constant (p+1)/4 matches the count
    for p in (3, 7, 11):
        assert (p - 1) % 4 != 0
        assert cyclotomic_number_bruteforce(0, 1, p, 1) == (p + 1) // 4
        assert cyclotomic_number_closed(0, 1, p, 1) == (p + 1) // 4
    assert fit_mixed_pair_constant([3, 7, 11], [1, 2]) == 1


def test_delta_star_spot_value():
    # -3 mod 9 = 6, the sole member of the level-1 non-square class
    assert delta_star(1, 1, 3, P3N2, mode="brute") == 1
    assert delta_star(1, 1, 3, P3N2, mode="closed") == 1


@pytest.mark.parametrize("p,n", [(3, 2), (3, 3), (5, 2), (7, 2)])
def test_delta_star_closed_equals_brute(p, n):
    params = FhsParams(p=p, n=n)
    for k in range(1, n + 1):
        for i in (0, 1):
            for tau in range(params.nu):
                assert delta_star(i, k, tau, params, mode="closed") == delta_star(
                    i, k, tau, params, mode="brute"
                )


@pytest.mark.parametrize("p,n", [(3, 2), (3, 3), (5, 2), (7, 2)])
def test_delta_lk_closed_equals_brute(p, n):
    params = FhsParams(p=p, n=n)
    for l in range(1, n + 1):
        for k in range(1, n + 1):
            for i in (0, 1):
                for j in (0, 1):
                    brute = delta_lk_table_bruteforce(i, j, l, k, params)
                    for tau in range(params.nu):
                        assert delta_lk(i, j, l, k, tau, params, mode="closed") == int(
                            brute[tau]
                        )


def test_delta_lk_identity_shift():
    params = FhsParams(p=3, n=3)
    for l in (1, 2, 3):
        for k in (1, 2, 3):
            for i in (0, 1):
                for j in (0, 1):
                    expected = unit_class_size(l, params) if (l == k and i == j) else 0
                    assert delta_lk(i, j, l, k, 0, params, mode="closed") == expected
                    assert delta_lk(i, j, l, k, 0, params, mode="brute") == expected


def test_delta_lk_brute_table_matches_scalar_brute():
    params = FhsParams(p=3, n=2)
    table = delta_lk_table_bruteforce(0, 1, 1, 2, params)
    for tau in range(params.nu):
        assert int(table[tau]) == delta_lk(0, 1, 1, 2, tau, params, mode="brute")

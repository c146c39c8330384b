import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symham.localdisc import (
    DigitContext,
    count_points,
    digit_factors,
    j_function,
    j_values,
    local_discrepancy,
    local_discrepancy_extended,
    local_discrepancy_formula,
    local_discrepancy_sym,
)
from symham.pointset import PointSet, Shift, all_shifts, hammersley, sample_shifts, symmetrized

F = Fraction


def test_count_points_examples():
    assert count_points(hammersley(1, "0"), F(1, 2), F(1, 2)) == 1
    assert count_points(hammersley(1, "1"), F(1, 2), F(1, 2)) == 0
    P = symmetrized(3, "010")
    assert count_points(P, 1, 1) == P.size


def test_local_discrepancy_examples():
    assert local_discrepancy(hammersley(1, "0"), F(1, 2), F(1, 2)) == F(1, 2)
    assert local_discrepancy(hammersley(1, "1"), F(1, 2), F(1, 2)) == F(-1, 2)
    assert local_discrepancy(symmetrized(4, "0011"), 1, 1) == 0


def test_count_is_multiplicity_aware():
    P = PointSet(1, ((1, 1), (1, 1), (0, 2)))
    assert count_points(P, 1, 1) == 2


def test_j_function_examples():
    ctx = DigitContext.build(2, "00", F(1, 2), F(1, 4))
    assert ctx.alpha_digit(2) == 0 and ctx.gamma(1) == 0
    assert j_function(ctx, 0) == 0
    assert j_function(ctx, 1) == 0
    # alpha_{m+1-j} == gamma_j for all j <= u gives 0
    ctx = DigitContext.build(3, "000", F(4, 8), F(0, 8))  # alpha digits 100, gamma 000
    assert [ctx.alpha_digit(4 - j) == ctx.gamma(j) for j in (1, 2)] == [True, True]
    assert j_function(ctx, 2) == 0


@pytest.mark.parametrize("m", range(1, 6))
def test_scan_agrees_with_definition(m):
    d = 2**m
    for sigma in all_shifts(m):
        for a in range(d):
            for b in range(0, d, 3):
                ctx = DigitContext.build(m, sigma, F(a, d), F(b, d))
                js = j_values(ctx)
                assert js == [j_function(ctx, u) for u in range(m)]
                assert all(0 <= j <= u for u, j in enumerate(js))
                facts = digit_factors(ctx)
                assert facts == [
                    ctx.alpha_digit(m - u) ^ ctx.alpha_digit(m + 1 - js[u]) for u in range(m)
                ]


def test_formula_examples():
    assert local_discrepancy_formula(1, "0", F(1, 2), F(1, 2)) == F(1, 2)
    assert local_discrepancy_formula(3, "011", F(3, 8), 0) == 0


def test_formula_rejects_non_mbit():
    with pytest.raises(ValueError):
        local_discrepancy_formula(2, "00", F(1, 3), F(1, 2))
    with pytest.raises(ValueError):
        local_discrepancy_formula(2, "00", F(1, 2), 1)


@pytest.mark.parametrize("m", range(1, 5))
def test_formula_equals_counting_all_shifts(m):
    d = 2**m
    for sigma in all_shifts(m):
        P = hammersley(m, sigma)
        for a in range(1, d):
            for b in range(1, d):
                assert local_discrepancy_formula(m, sigma, F(a, d), F(b, d)) == local_discrepancy(
                    P, F(a, d), F(b, d)
                )


def test_extension_worked_example():
    # counting: only (0, 0) lies in [0, 3/8)^2, so Delta = 1 - 2 * 9/64
    assert local_discrepancy(hammersley(1, "0"), F(3, 8), F(3, 8)) == F(23, 32)
    assert local_discrepancy_extended(1, "0", F(3, 8), F(3, 8)) == F(23, 32)


def test_extension_edges():
    for m in range(1, 5):
        for sigma in all_shifts(m):
            for a in range(1, 2**m + 1):
                assert local_discrepancy_extended(m, sigma, F(a, 2**m), 1) == 0
            assert local_discrepancy_extended(m, sigma, 1, 1) == 0


@pytest.mark.parametrize("m", range(1, 7))
def test_extension_equals_counting_random(m):
    rng = random.Random(m)
    for sigma in sample_shifts(m, 3, seed=m):
        P = hammersley(m, sigma)
        for _ in range(200):
            al = F(rng.randint(1, 997), 997)
            be = F(rng.randint(1, 2**m * 3), 2**m * 3)
            assert local_discrepancy_extended(m, sigma, al, be) == local_discrepancy(P, al, be)


shift_and_corner = st.integers(1, 7).flatmap(
    lambda m: st.tuples(
        st.just(m),
        st.integers(0, 2**m - 1),
        st.fractions(min_value=0, max_value=1, max_denominator=5000).filter(lambda x: x > 0),
        st.fractions(min_value=0, max_value=1, max_denominator=5000).filter(lambda x: x > 0),
    )
)


@settings(max_examples=200, deadline=None)
@given(shift_and_corner)
def test_symmetrized_additivity(args):
    m, s, al, be = args
    sigma = Shift.from_int(s, m)
    assert local_discrepancy_sym(m, sigma, al, be) == local_discrepancy(symmetrized(m, sigma), al, be)


def test_sym_examples():
    assert local_discrepancy_sym(1, "0", F(1, 2), F(1, 2)) == 0
    assert local_discrepancy_sym(5, "01101", 1, 1) == 0


@settings(max_examples=100, deadline=None)
@given(shift_and_corner, st.fractions(min_value=0, max_value=1, max_denominator=100))
def test_count_is_monotone(args, bump):
    m, s, al, be = args
    P = hammersley(m, Shift.from_int(s, m))
    assert count_points(P, al, be) <= count_points(P, min(al + bump, 1), be)
    assert count_points(P, al, be) <= count_points(P, al, min(be + bump, 1))

from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from belltransform import series as S
from belltransform.bell_core import (
    BellTable,
    a000257_term,
    closed_form_f_bell,
    faa_di_bruno_compose,
    factorial_weight,
    log_polynomial,
    partial_bell,
    partial_bell_direct,
    potential_polynomial,
    to_fraction,
)
from belltransform.catalog import bell_numbers
from belltransform.errors import DomainError, LengthError

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def test_small_values():
    assert partial_bell(3, 2, (1, 1, 1)) == 3
    assert partial_bell(4, 2, (1, 2, 6)) == 36
    assert partial_bell(4, 2, (1, 2, 6)) == Fraction(factorial(4), factorial(2)) * comb(3, 1)


def test_b53_counts_type_122_fifteen_times():
    # z3 = 0 leaves only the block type 1+2+2; [5] splits that way in 15 ways
    assert partial_bell(5, 3, (1, 2, 0, 0, 0)) == 15 * 1 * 2 ** 2
    assert partial_bell_direct(5, 3, (1, 2, 0, 0, 0)) == 60


def test_direct_agrees_on_examples():
    assert partial_bell_direct(3, 2, (1, 1, 1)) == 3
    assert partial_bell_direct(6, 3, (1, 1, 1, 1)) == partial_bell(6, 3, (1, 1, 1, 1))
    for n in range(1, 7):
        assert partial_bell_direct(n, n, (Fraction(3, 2),)) == Fraction(3, 2) ** n


def test_stirling_numbers_of_second_kind():
    # B_{n,k}(1,1,...) counts set partitions of [n] into k blocks
    t = BellTable([1] * 8, 8)
    assert t.row(5) == (1, 15, 25, 10, 1)
    assert sum(t.row(6)) == bell_numbers(6)[-1]


def test_errors():
    with pytest.raises(DomainError):
        partial_bell(3, 0, (1, 1, 1))
    with pytest.raises(DomainError):
        partial_bell(3, 4, (1, 1, 1))
    with pytest.raises(LengthError):
        BellTable([1, 1], 4)
    with pytest.raises(TypeError):
        to_fraction(0.5)


@settings(max_examples=40, deadline=None)
@given(st.lists(rationals, min_size=7, max_size=7), st.integers(1, 7))
def test_recurrence_matches_multi_index_sum(z, n):
    t = BellTable(z, 7)
    for k in range(1, n + 1):
        assert t(n, k) == partial_bell_direct(n, k, z)


@settings(max_examples=25, deadline=None)
@given(st.lists(rationals, min_size=6, max_size=6), rationals, rationals)
def test_homogeneity(z, a, b):
    # B_{n,k}(a b z_1, a b^2 z_2, ...) = a^k b^n B_{n,k}(z)
    scaled = [a * b ** (i + 1) * v for i, v in enumerate(z)]
    for n in range(1, 7):
        for k in range(1, n + 1):
            assert partial_bell(n, k, scaled) == a ** k * b ** n * partial_bell(n, k, z)


@settings(max_examples=25, deadline=None)
@given(st.lists(rationals, min_size=7, max_size=7))
def test_shift_convolution(z):
    # k B_{n,k}(z) = sum_j C(n,j) z_j B_{n-j,k-1}(z)
    t = BellTable(z, 7)
    for n in range(2, 8):
        for k in range(2, n + 1):
            rhs = sum(comb(n, j) * z[j - 1] * t(n - j, k - 1) for j in range(1, n))
            assert k * t(n, k) == rhs


def test_row_sums_factorial_identity():
    # B_{n,k}(1!, 2!, ...) = n!/k! C(n-1, k-1) (Lah numbers)
    z = factorial_weight([1] * 9)
    t = BellTable(z, 9)
    for n in range(1, 10):
        for k in range(1, n + 1):
            assert t(n, k) == Fraction(factorial(n), factorial(k)) * comb(n - 1, k - 1)


def test_factorial_weight():
    assert factorial_weight((1, 1, 1)) == (1, 2, 6)
    assert factorial_weight((1, Fraction(1, 2), Fraction(1, 6))) == (1, 1, 1)
    assert factorial_weight((2, 3, 5)) == (2, 6, 30)


def test_log_polynomial_examples():
    assert log_polynomial(1, (Fraction(7, 3),)) == Fraction(7, 3)
    assert log_polynomial(2, (1, 1)) == 0
    assert log_polynomial(3, (1, 2, 6)) == 2


def test_potential_polynomial_examples():
    for n in range(1, 5):
        assert potential_polynomial(n, 0, (1, 2, 3, 4)) == 0
    assert potential_polynomial(2, 2, (1, 0)) == 2
    assert potential_polynomial(3, Fraction(1, 2), (1, 0, 0)) == Fraction(3, 8)


@settings(max_examples=20, deadline=None)
@given(st.lists(rationals, min_size=6, max_size=6), rationals)
def test_log_and_potential_against_series(g, r):
    N = 6
    s = S.Series([1] + [g[i] / factorial(i + 1) for i in range(N)])
    lg = S.log1p(s)
    pw = S.power(s, r)
    for n in range(1, N + 1):
        assert log_polynomial(n, g) == lg[n] * factorial(n)
        assert potential_polynomial(n, r, g) == pw[n] * factorial(n)


def test_faa_di_bruno_examples():
    g = (Fraction(2), Fraction(-1), Fraction(5), Fraction(1, 3))
    ident = (0, 1, 0, 0, 0)
    assert faa_di_bruno_compose(ident, g, 4)[1:] == g
    # exp(e^t - 1): Bell numbers
    h = faa_di_bruno_compose([1] * 7, [1] * 6, 6)
    assert h[1:] == (1, 2, 5, 15, 52, 203)
    assert h[1:] == bell_numbers(6)


@settings(max_examples=20, deadline=None)
@given(st.lists(rationals, min_size=7, max_size=7),
       st.lists(rationals, min_size=6, max_size=6))
def test_faa_di_bruno_against_compose(f, g):
    N = 6
    h = faa_di_bruno_compose(f, g, N)
    F = S.Series([f[i] / factorial(i) for i in range(N + 1)])
    G = S.Series([0] + [g[i] / factorial(i + 1) for i in range(N)])
    H = S.compose(F, G)
    for n in range(N + 1):
        assert h[n] == H[n] * factorial(n)


def test_closed_form_small():
    assert a000257_term(1) == 1
    assert [a000257_term(j) for j in range(1, 7)] == [1, 3, 12, 56, 288, 1584]
    assert closed_form_f_bell(1, 1) == 1
    assert closed_form_f_bell(3, 2) == 6


def test_closed_form_triangle():
    f = [a000257_term(j) for j in range(1, 9)]
    t = BellTable(factorial_weight(f), 8)
    for n in range(1, 9):
        for k in range(1, n + 1):
            assert closed_form_f_bell(n, k) == Fraction(factorial(k), factorial(n)) * t(n, k)

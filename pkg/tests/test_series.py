from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from catwords import series as S
from catwords.series import BivariateSeries
from catwords.sequences import binom, catalan

ORDER = 6

small = st.integers(min_value=-4, max_value=4)
ypoly = st.lists(small, min_size=0, max_size=3)
bivariate = st.lists(ypoly, min_size=ORDER + 1, max_size=ORDER + 1).map(lambda cs: BivariateSeries(cs, ORDER))
unit = st.tuples(st.integers(min_value=1, max_value=3), bivariate).map(
    lambda t: BivariateSeries([[t[0]]] + t[1].coeffs[1:], ORDER))
one_plus = bivariate.map(lambda s: BivariateSeries([[1]] + s.coeffs[1:], ORDER))


@given(bivariate, bivariate, bivariate)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(bivariate, unit)
def test_division_inverts_multiplication(a, b):
    assert (a / b) * b == a
    assert (a * b) / b == a


@settings(max_examples=50)
@given(one_plus)
def test_sqrt_squares_back(a):
    r = S.sqrt(a)
    assert r * r == a
    assert r.coeff(0) == 1


@given(bivariate)
def test_dy_is_a_derivation(a):
    b = a * a
    assert b.dy() == 2 * a * a.dy()


def test_catalan_series_from_quadratic():
    X = S.x(12)
    cat = (1 - S.sqrt(1 - 4 * X)).div_monomial(1) / 2
    assert cat.univariate()[:12] == [catalan(n) for n in range(12)]
    assert cat.order == 11


def test_catalan_series_has_fraction_free_coefficients():
    X = S.x(10)
    cat = (1 - S.sqrt(1 - 4 * X)).div_monomial(1) / 2
    assert all(isinstance(c, int) for c in cat.univariate())


def test_substitution_y_to_xy():
    X, Y = S.x(8), S.y(8)
    s = 1 / (1 - X - X * Y)
    t = s.subs_y_monomial(1)
    for n in range(9):
        for k in range(n + 1):
            expected = binom(n - k, k)
            assert t.coeff(n, k) == expected


def test_at_y1_and_dy():
    X, Y = S.x(5), S.y(5)
    s = 1 / (1 - X * (1 + Y))
    assert s.at_y1().univariate() == [2 ** n for n in range(6)]
    assert s.dy().at_y1().univariate() == [n * 2 ** (n - 1) if n else 0 for n in range(6)]


def test_rational_coefficients_are_exact():
    X = S.x(4)
    s = 1 / (2 - X)
    assert s.univariate() == [Fraction(1, 2 ** (n + 1)) for n in range(5)]


def test_errors():
    X, Y = S.x(4), S.y(4)
    with pytest.raises(S.NonInvertibleLeadingCoefficient):
        1 / X
    with pytest.raises(S.NonInvertibleLeadingCoefficient):
        1 / Y
    with pytest.raises(S.BadConstantTerm):
        S.sqrt(4 + X)
    with pytest.raises(S.NonExactMonomialDivision):
        (1 + X).div_monomial(1)
    with pytest.raises(S.NonExactMonomialDivision):
        (X + X * Y).div_monomial(1, 1)
    with pytest.raises(ZeroDivisionError):
        X / 0
    with pytest.raises(ValueError):
        (1 + Y).univariate()


def test_mixed_orders_truncate_to_minimum():
    assert (S.x(3) + S.x(7)).order == 3


def test_pretty_and_json_round_trip():
    X, Y = S.x(4), S.y(4)
    s = 1 + X + (2 + 3 * Y) * X ** 2 - Fraction(1, 2) * X ** 4 * Y
    assert s.pretty() == "1 + x + (2 + 3y) x^2 - 1/2y x^4 + O(x^5)"
    assert BivariateSeries.from_json_obj(s.to_json_obj()) == s


def test_coefficient_access_beyond_order_raises():
    with pytest.raises(S.OrderExceeded):
        S.x(3).coeff(4)

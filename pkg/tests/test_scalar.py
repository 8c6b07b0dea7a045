from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from jackpfq.errors import InvalidInput, NonInvertible
from jackpfq.scalar import (
    UniSeries,
    complete_homogeneous,
    elementary,
    format_rational,
    parse_rational,
    pochhammer,
    ps_inv,
    ps_linear,
    ps_mul,
    ps_pow,
    rat,
)

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=30)


def series(coeffs, order):
    return UniSeries.from_coefficients(coeffs, order)


def test_rat_normalizes():
    assert rat(2, 4) == Fraction(1, 2)
    assert rat(3, -6) == Fraction(-1, 2)
    assert format_rational(rat(0, 7)) == "0"
    with pytest.raises(InvalidInput):
        rat(1, 0)


@pytest.mark.parametrize("text, value", [("3", 3), ("-3/6", Fraction(-1, 2)), (" 7/2 ", Fraction(7, 2))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["", "1/0", "x", "1.5.2"])
def test_parse_rational_rejects(text):
    with pytest.raises(InvalidInput):
        parse_rational(text)


@given(fractions)
def test_format_parse_roundtrip(x):
    assert parse_rational(format_rational(x)) == x


def test_pochhammer():
    assert pochhammer(Fraction(1, 2), 0) == 1
    assert pochhammer(3, 2) == 12
    assert pochhammer(-2, 3) == 0


def test_symmetric_functions_of_values():
    vals = [1, 2, 3]
    assert elementary(vals, 2) == 11
    assert complete_homogeneous(vals, 2) == 25
    assert elementary(vals, 4) == 0
    assert complete_homogeneous([], 0) == 1


def test_multiplication_examples():
    assert ps_mul(series([1, 1], 2), series([1, -1], 2)) == series([1, 0, -1], 2)
    b = series([3, 1, 4], 2)
    assert ps_mul(UniSeries.constant(1, 2), b) == b
    assert ps_mul(series([1, 1, 1], 2), series([1, 1], 2)) == series([1, 2, 2], 2)


def test_mismatched_orders_rejected():
    with pytest.raises(InvalidInput):
        ps_mul(series([1], 1), series([1], 2))


def test_inverse_examples():
    assert ps_inv(series([1, -1], 3)) == series([1, 1, 1, 1], 3)
    assert ps_inv(UniSeries.constant(1, 2)) == UniSeries.constant(1, 2)
    assert ps_inv(series([2, 1], 1)) == series([Fraction(1, 2), Fraction(-1, 4)], 1)
    with pytest.raises(NonInvertible):
        ps_inv(series([0, 1], 2))


@given(st.lists(fractions, min_size=1, max_size=5), st.integers(0, 4))
def test_inverse_is_two_sided(coeffs, order):
    if coeffs[0] == 0:
        coeffs[0] = Fraction(1)
    a = series(coeffs, order)
    assert ps_mul(a, ps_inv(a)) == UniSeries.constant(1, order)


@given(fractions, fractions, st.integers(0, 5))
def test_power_of_linear_is_binomial(c0, c1, k):
    s = ps_pow(ps_linear(c0, c1, 5), k)
    for i in range(6):
        assert s[i] == (comb(k, i) * c0 ** (k - i) * c1**i if i <= k else 0)

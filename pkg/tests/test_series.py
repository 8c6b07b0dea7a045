from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from jackpfq.errors import PoleError
from jackpfq.jack import JackForm, jack
from jackpfq.partitions import ParamSet, alpha_pochhammer
from jackpfq.scalar import pochhammer
from jackpfq.series import (
    DiagSeries,
    JackSeries,
    bi_add,
    bi_at_ones_y,
    bi_swap,
    build_2F1hat,
    build_pFq,
    cauchy_product,
    diag_to_bipoly,
    exp_p1,
    is_jack_diagonal,
    one_f_zero_product,
    pochhammer_coefficient,
    tensor,
    to_sympoly,
)
from jackpfq.sympoly import SymPoly, basis_m

A = Fraction(5, 2)
alphas = st.fractions(min_value=Fraction(1, 6), max_value=6, max_denominator=6)
values = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def test_coefficients_and_poles():
    a, b = Fraction(1, 3), Fraction(2, 7)
    P = ParamSet(A, (a,), (b,), 2)
    assert pochhammer_coefficient(P, ()) == 1
    assert pochhammer_coefficient(P, (2, 1)) == alpha_pochhammer(a, (2, 1), A) / alpha_pochhammer(b, (2, 1), A)
    # (1/5)_(1,1) at alpha = 5 vanishes in its second box
    bad = ParamSet(5, (a,), (Fraction(1, 5),), 2)
    with pytest.raises(PoleError) as info:
        pochhammer_coefficient(bad, (1, 1))
    assert info.value.partition == (1, 1)


def test_zero_truncation_is_one():
    s = build_pFq(ParamSet(A, (1,), (2,), 3), 0)
    assert to_sympoly(s) == SymPoly.one(3)


def test_2F1hat_coefficients():
    a, b, c = Fraction(1, 2), Fraction(-1, 3), Fraction(3, 4)
    s = build_2F1hat(a, b, c, 2, A, 3)
    assert s.kind == "2F1hat" and s.coeffs[()] == 1
    want = a * (a - 1 / A) * b * (b - 1 / A) / (c * (c + 1))
    assert s.coeffs[(1, 1)] == want
    with pytest.raises(PoleError):
        build_2F1hat(a, b, -1, 2, A, 3)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_0F0_is_exp_p1(n):
    d = 6
    assert to_sympoly(build_pFq(ParamSet(A, (), (), n), d)) == exp_p1(n, d)


@settings(max_examples=10, deadline=None)
@given(alphas, values)
def test_1F0_is_a_product(alpha, a):
    for n in (1, 2, 3):
        s = build_pFq(ParamSet(alpha, (a,), (), n), 4)
        assert to_sympoly(s) == one_f_zero_product(a, n, 4)


def test_one_variable_is_classical():
    a, b, c = Fraction(1, 2), Fraction(2, 3), Fraction(5, 4)
    s = to_sympoly(build_pFq(ParamSet(A, (a, b), (c,), 1), 5))
    for k in range(6):
        assert s.coefficient((k,)) == pochhammer(a, k) * pochhammer(b, k) / (pochhammer(c, k) * factorial(k))


def test_cauchy_identity():
    n, alpha = 2, A
    F = diag_to_bipoly(build_pFq(ParamSet(alpha, (n / alpha,), (), n), 3, alphabets=2))
    assert F == cauchy_product(alpha, n, 3)
    assert is_jack_diagonal(F, n, alpha)


def test_diagonal_detection():
    F = tensor(jack((2,), 2, A), jack((1, 1), 2, A))
    assert not is_jack_diagonal(F, 2, A)
    G = diag_to_bipoly(build_pFq(ParamSet(A, (1,), (3,), 2), 3, alphabets=2))
    assert is_jack_diagonal(G, 2, A)
    assert bi_swap(bi_swap(G)) == G


def test_setting_y_to_ones():
    # Omega_lam(1) = 1, so F(x, 1) = sum C alpha^|lam| J*_lam(1) Omega_lam(x)
    s = build_pFq(ParamSet(A, (Fraction(1, 2),), (), 2), 3, alphabets=2)
    got = bi_at_ones_y(diag_to_bipoly(s), 2)
    want = SymPoly.zero(2)
    for lam, c in s.coeffs.items():
        ones = jack(lam, 2, A, JackForm.Jstar).eval_ones()
        want = want + jack(lam, 2, A, JackForm.Omega).scale(c * A ** sum(lam) * ones)
    assert got == want


def test_bi_add_drops_zeros():
    F = tensor(basis_m((1,), 2), basis_m((1,), 2))
    assert bi_add(F, F, -1) == {}


def test_restrict_and_json():
    s = build_pFq(ParamSet(A, (1,), (2,), 3), 3)
    r = s.restrict(1)
    assert r.n == 1 and all(len(lam) <= 1 for lam in r.coeffs)
    data = s.to_json()
    assert data["n"] == 3 and data["coeffs"][0] == {"part": [], "coef": "1"}
    d = build_pFq(ParamSet(A, (), (), 2), 2, alphabets=2)
    assert isinstance(d, DiagSeries) and d.to_json()["kind"] == "pFq-two-alphabet"
    assert isinstance(s, JackSeries)

from dataclasses import replace
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from jackpfq.errors import PoleError
from jackpfq.partitions import ParamSet
from jackpfq.scalar import pochhammer
from jackpfq.series import build_2F1hat, build_pFq, exp_p1, to_sympoly
from jackpfq.solver import (
    lowering_residual,
    residual_appendix,
    residual_theorem_A,
    residual_theorem_B,
    residual_theorem_C,
    solve_appendix,
    solve_theorem_A,
    solve_theorem_B,
    solve_theorem_B_steps,
    solve_theorem_C,
    stability_counterexample,
    two_by_two_determinant,
)
from jackpfq.sympoly import basis_m

A = Fraction(3, 2)
alphas = st.fractions(min_value=Fraction(1, 5), max_value=5, max_denominator=7)
values = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def params(alpha, p, q, n, vals):
    return ParamSet(alpha, tuple(vals[:p]), tuple(vals[p:p + q]), n)


def nudge(series, lam, by=Fraction(1, 97)):
    coeffs = dict(series.coeffs)
    coeffs[lam] += by
    return replace(series, coeffs=coeffs)


GENERIC = [Fraction(1, 3), Fraction(-2, 7), Fraction(5, 4), Fraction(2, 9), Fraction(-7, 5), Fraction(3, 8)]


@pytest.mark.parametrize("p, q", [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1)])
def test_theorem_A(p, q):
    P = params(A, p, q, 2, GENERIC)
    s = solve_theorem_A(P, 3)
    assert dict(s.coeffs) == dict(build_pFq(P, 3, alphabets=2).coeffs)
    for variant in ("A", "Aprime"):
        r = residual_theorem_A(s, variant)
        assert r.complete_keys() and r.is_zero()


def test_theorem_A_examples():
    a, b = Fraction(2, 5), Fraction(-1, 3)
    P = ParamSet(A, (a,), (b,), 2)
    s = solve_theorem_A(P, 2)
    assert s.coeffs[(2,)] == s.coeffs[(1,)] * (1 + a) / (1 + b)
    assert s.coeffs[(1, 1)] == s.coeffs[(1,)] * (-1 / A + a) / (-1 / A + b)


def test_theorem_A_negative_control():
    P = params(A, 1, 1, 2, GENERIC)
    s = nudge(solve_theorem_A(P, 3), (1, 1))
    assert not residual_theorem_A(s, "A").is_zero()


def test_theorem_A_pole():
    with pytest.raises(PoleError):
        solve_theorem_A(ParamSet(A, (1,), (-1,), 2), 3)


@settings(max_examples=8, deadline=None)
@given(alphas, st.lists(values, min_size=4, max_size=4), st.integers(0, 2), st.integers(0, 2))
def test_theorem_C_random(alpha, vals, p, q):
    P = params(alpha, p, q, 2, vals)
    try:
        want = build_pFq(P, 4)
    except PoleError:
        return
    s = solve_theorem_C(P, 4)
    assert dict(s.coeffs) == dict(want.coeffs)
    assert residual_theorem_C(s).is_zero()
    assert residual_theorem_C(s, "transport").is_zero()


def test_theorem_C_one_variable_is_gauss():
    a, b, c = Fraction(1, 2), Fraction(1, 3), Fraction(7, 4)
    s = solve_theorem_C(ParamSet(A, (a, b), (c,), 1), 6)
    f = to_sympoly(s)
    for k in range(7):
        assert f.coefficient((k,)) == pochhammer(a, k) * pochhammer(b, k) / (pochhammer(c, k) * factorial(k))


def test_theorem_C_zero_parameters():
    s = solve_theorem_C(ParamSet(A, (), (), 1), 5)
    assert to_sympoly(s) == exp_p1(1, 5)
    assert residual_theorem_C(s).is_zero()


def test_theorem_C_negative_control():
    P = params(A, 3, 2, 3, GENERIC)
    s = nudge(solve_theorem_C(P, 4), (2, 1))
    assert not residual_theorem_C(s).is_zero()
    assert not residual_theorem_C(s, "transport").is_zero()


@pytest.mark.parametrize("p, q", [(0, 0), (1, 1), (2, 1), (2, 2), (3, 2)])
def test_theorem_B(p, q):
    P = params(A, p, q, 3, GENERIC)
    s, steps = solve_theorem_B_steps(P, 4)
    assert dict(s.coeffs) == dict(build_pFq(P, 4).coeffs)
    for step in steps:
        assert step.determinant is None or step.determinant != 0
    for m in (1, 2, 3):
        assert residual_theorem_B(s, m).is_zero()
        assert residual_theorem_B(s, m, "transport").is_zero()


def test_theorem_B_first_step():
    a, b = Fraction(2, 5), Fraction(-1, 3)
    P = ParamSet(A, (a,), (b,), 3)
    s, steps = solve_theorem_B_steps(P, 2)
    step = next(st for st in steps if st.mu == (1,))
    assert set(step.unknowns) == {(2,), (1, 1)}
    assert step.determinant == two_by_two_determinant((1,), P)
    assert s.coeffs[(2,)] == a * (1 + a) / (b * (1 + b))
    assert s.coeffs[(1, 1)] == a * (a - 1 / A) / (b * (b - 1 / A))


def test_theorem_B_negative_control():
    P = params(A, 2, 1, 2, GENERIC)
    s = nudge(solve_theorem_B(P, 4), (1, 1))
    assert not residual_theorem_B(s, 2).is_zero()


def test_theorem_B_small_examples():
    two_f_one = build_pFq(params(A, 2, 1, 2, GENERIC), 4)
    assert residual_theorem_B(two_f_one, 1).is_zero() and residual_theorem_B(two_f_one, 2).is_zero()
    zero_f_zero = build_pFq(ParamSet(A, (), (), 2), 4)
    assert residual_theorem_B(zero_f_zero, 1).is_zero() and residual_theorem_B(zero_f_zero, 2).is_zero()
    one_f_one = build_pFq(params(A, 1, 1, 2, GENERIC), 4)
    assert residual_theorem_B(one_f_one, 2).is_zero()


def test_lowering_residual_on_polynomial():
    P = ParamSet(A, (), (), 2)
    assert lowering_residual(exp_p1(2, 5), P, 5).is_zero()
    assert not lowering_residual(exp_p1(2, 5) + basis_m((1, 1), 2), P, 5).is_zero()


@pytest.mark.parametrize("kind", ["Bhat", "Chat"])
def test_appendix(kind):
    a, b, c = Fraction(1, 3), Fraction(-2, 7), Fraction(5, 4)
    s = solve_appendix(kind, a, b, c, 2, A, 4)
    assert dict(s.coeffs) == dict(build_2F1hat(a, b, c, 2, A, 4).coeffs)
    assert residual_appendix(kind, s).is_zero()
    assert residual_appendix(kind, s, mode="transport").is_zero()
    assert not residual_appendix(kind, nudge(s, (2, 1))).is_zero()


def test_appendix_one_variable_is_gauss():
    a, b, c = Fraction(1, 3), Fraction(-2, 7), Fraction(5, 4)
    f = to_sympoly(solve_appendix("Chat", a, b, c, 1, A, 5))
    for k in range(6):
        assert f.coefficient((k,)) == pochhammer(a, k) * pochhammer(b, k) / (pochhammer(c, k) * factorial(k))


def test_stability_counterexample():
    rep = stability_counterexample(6)
    assert rep.passes_m2 and rep.fails_m1 and rep.differs_from_0F0
    assert rep.first_m1_failure == 1
    assert rep.G.homogeneous(2) != exp_p1(2, 6).homogeneous(2)


def test_stability_with_trivial_H():
    rep = stability_counterexample(5, h=(1,))
    assert rep.passes_m2 and not rep.fails_m1 and not rep.differs_from_0F0
    with pytest.raises(ValueError):
        stability_counterexample(5, h=(1, 1))

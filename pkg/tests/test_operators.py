from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from jackpfq.errors import InvalidInput
from jackpfq.jack import JackForm, binom_up, jack, jack_J, pieri_phi
from jackpfq.operators import (
    AdPower,
    Box,
    Commutator,
    Compose,
    Custom,
    DiffOp,
    E,
    Identity,
    MulE1,
    Scaled,
    apply_E,
    apply_box,
    apply_lowering_L,
    apply_raising_R,
    ad_box_sq_e1_display,
    box1_display,
    lowering_expr,
    mul_e1,
    power,
    raising_expr,
)
from jackpfq.partitions import ParamSet, covered_by, partitions_up_to, rho, rho_skew
from jackpfq.series import exp_p1
from jackpfq.sympoly import SymPoly, basis_m, basis_p, mul

A = Fraction(4, 3)
alphas = st.fractions(min_value=Fraction(1, 5), max_value=5, max_denominator=6)
values = st.fractions(min_value=-4, max_value=4, max_denominator=5)


def monomials(maxdeg, n):
    return [basis_m(lam, n) for lam in partitions_up_to(maxdeg, n)]


def test_euler_operators_on_monomials():
    assert apply_E(1, basis_m((1,), 5)) == SymPoly.one(5).scale(5)
    f = basis_m((2, 1), 3)
    assert apply_E(2, f) == f.scale(3)
    assert apply_E(1, SymPoly.one(2)).is_zero()
    with pytest.raises(InvalidInput):
        apply_E(0, f)


def test_mul_e1_matches_product():
    for f in monomials(3, 3):
        assert mul_e1(f) == mul(basis_m((1,), 3), f)


def test_box_on_power_sum():
    # the pair term gives (2/alpha) sum_{i != j} x_i^2 x_j / (x_i - x_j) = (2/alpha) m_11
    n = 2
    out = apply_box(basis_p(2, n), A)
    assert out == basis_p(2, n) + basis_m((1, 1), n).scale(2 / A)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_commutator_box_e1_is_E3(n):
    op = Commutator(Box(), MulE1())
    for f in monomials(4, n):
        assert op.apply(f, A) == apply_E(3, f)


@pytest.mark.parametrize("n", [2, 3])
def test_displayed_closed_forms(n):
    for f in monomials(4, n):
        assert Custom(box1_display(A)).apply(f, A) == Commutator(E(1), Box()).apply(f, A)
        assert Custom(ad_box_sq_e1_display(A)).apply(f, A) == AdPower(Box(), MulE1(), 2).apply(f, A)


def test_ad_power_zero_and_one():
    f = basis_m((2, 1), 3)
    assert AdPower(Box(), MulE1(), 0).apply(f, A) == mul_e1(f)
    assert AdPower(Box(), MulE1(), 1).apply(f, A) == Commutator(Box(), MulE1()).apply(f, A)
    with pytest.raises(InvalidInput):
        AdPower(Box(), MulE1(), -1).apply(f, A)


def test_power_and_identity():
    f = basis_m((1, 1), 2)
    assert Identity().apply(f, A) == f
    assert power(E(2), 3).apply(f, A) == f.scale(8)
    assert Compose(E(1), MulE1()).apply(f, A) == E(1).apply(mul_e1(f), A)


def test_diffop_degree_shift():
    assert DiffOp(singles=((Fraction(1), 0, 1),)).degree_shift == -1
    assert box1_display(A).degree_shift == -1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_actions_on_exp_p1(n):
    # identities of truncated series; each side is exact below the truncation edge
    d = 6
    ex = exp_p1(n, d)
    p1, p2 = basis_p(1, n), basis_p(2, n)
    cut = d - 1

    def lhs(op):
        return op.apply(ex, A).truncate(cut)

    def rhs(g):
        return mul(g, ex).truncate(cut)

    assert lhs(E(1)) == ex.scale(n).truncate(cut)
    assert lhs(E(2)) == rhs(p1)
    assert lhs(Box()) == rhs(p2.scale(Fraction(1, 2)))
    assert lhs(Commutator(E(1), Box())) == rhs(p1)
    nested = Commutator(Commutator(E(1), Box()), Box())
    assert lhs(nested) == rhs(p1.scale(1 + (n - 1) / A) + p2)


@settings(max_examples=15, deadline=None)
@given(alphas, values, values)
def test_lowering_on_omega_is_brute_force_sum(alpha, b1, b2):
    n, lam = 2, (2, 1)
    P = ParamSet(alpha, (), (b1, b2), n)
    got = apply_lowering_L(P, jack(lam, n, alpha, JackForm.Omega))
    want = SymPoly.zero(n)
    for mu in covered_by(lam):
        rh = rho_skew(lam, mu, alpha)
        w = (rh + b1) * (rh + b2) * binom_up(lam, mu, alpha)
        want = want + jack(mu, n, alpha, JackForm.Omega).scale(w)
    assert got == want
    assert lowering_expr(P.lower).apply(jack(lam, n, alpha, JackForm.Omega), alpha) == got


@settings(max_examples=15, deadline=None)
@given(alphas, values, values)
def test_raising_expression_and_pieri(alpha, a1, a2):
    n, mu = 3, (2, 1)
    P = ParamSet(alpha, (a1, a2), (), n)
    f = jack_J(mu, n, alpha)
    got = apply_raising_R(P, f)
    assert raising_expr(P.upper).apply(f, alpha) == got
    # R acts on J_mu by weighting each Pieri term with prod (rho(lam/mu) + a)
    want = SymPoly.zero(n)
    for lam in [(3, 1), (2, 2), (2, 1, 1)]:
        rh = rho_skew(lam, mu, alpha)
        want = want + jack_J(lam, n, alpha).scale((rh + a1) * (rh + a2) * pieri_phi(lam, mu, alpha, n))
    assert got == want


def test_raising_two_parameters_display():
    a, b = Fraction(1, 2), Fraction(-3, 7)
    P = ParamSet(A, (a, b), (), 2)
    expr = (
        Scaled(a * b, MulE1())
        + Scaled(a + b, Commutator(Box(), MulE1()))
        + Commutator(Box(), Commutator(Box(), MulE1()))
    )
    for f in monomials(3, 2):
        assert expr.apply(f, A) == apply_raising_R(P, f)


def test_box_eigenvalue_sanity():
    for lam in partitions_up_to(3, 2):
        J = jack_J(lam, 2, A)
        assert Box().apply(J, A) == J.scale(rho(lam, A))

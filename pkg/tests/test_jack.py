from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from jackpfq.errors import DegenerateParameter, InvalidInput
from jackpfq.jack import (
    JackForm,
    binom_down_formula,
    binom_general,
    binom_up,
    convert_form,
    from_jack_expansion,
    jack,
    jack_J,
    jack_eval_ones,
    j_norm,
    pieri_phi,
    pieri_phi_from_binom,
    to_jack_expansion,
)
from jackpfq.operators import apply_box, mul_e1
from jackpfq.partitions import alpha_pochhammer, covered_by, covers_of, hooks, partitions_up_to, rho
from jackpfq.sympoly import basis_m, hall_inner, mul, schur

alphas = st.fractions(min_value=Fraction(1, 7), max_value=7, max_denominator=7)
A = Fraction(5, 3)


def test_small_jacks():
    assert jack_J((2,), 2, 1) == basis_m((2,), 2).scale(2) + basis_m((1, 1), 2).scale(2)
    assert jack_J((1, 1), 3, A) == basis_m((1, 1), 3).scale(2)
    assert jack_J((), 2, A).eval_ones() == 1
    with pytest.raises(InvalidInput):
        jack_J((1, 1, 1), 2, A)


def test_eigenvalue_collision_is_degenerate():
    with pytest.raises(DegenerateParameter):
        jack_J((2,), 2, -1)


@pytest.mark.parametrize("lam", partitions_up_to(4, 3))
def test_laplace_beltrami_eigenfunction(lam):
    J = jack_J(lam, 3, A)
    assert apply_box(J, A) == J.scale(rho(lam, A))


def test_leading_coefficients():
    for lam in partitions_up_to(4, 4):
        J = jack_J(lam, 4, A)
        assert J.coefficient(lam) == hooks(lam, A).c
        k = sum(lam)
        if lam:
            assert J.coefficient((1,) * k) == factorial(k)


def test_evaluation_at_ones():
    assert jack_eval_ones((1,), 4, A) == 4
    assert jack_eval_ones((1, 1), 2, A) == 2
    assert jack_eval_ones((), 3, A) == 1
    for lam in partitions_up_to(4, 3):
        k = sum(lam)
        assert jack_eval_ones(lam, 3, A) == A**k * alpha_pochhammer(3 / A, lam, A)
        assert jack_J(lam, 3, A).eval_ones() == jack_eval_ones(lam, 3, A)


def test_orthogonality():
    shapes = [lam for lam in partitions_up_to(4, 4) if sum(lam) == 4]
    for lam in shapes:
        for mu in shapes:
            expected = j_norm(lam, A) if lam == mu else 0
            assert hall_inner(jack_J(lam, 4, A), jack_J(mu, 4, A), A) == expected


def test_schur_specialization():
    for lam in partitions_up_to(4, 3):
        assert jack_J(lam, 3, 1) == schur(lam, 3).scale(hooks(lam, 1).c)


def test_forms():
    lam = (2, 1)
    J = jack(lam, 3, A)
    assert jack(lam, 3, A, JackForm.Jstar) == J.scale(1 / j_norm(lam, A))
    assert jack(lam, 3, A, "Omega").eval_ones() == 1
    assert convert_form(1, lam, "J", "Jstar", 3, A) == 1 / j_norm(lam, A)
    assert convert_form(7, lam, "Omega", "Omega", 3, A) == 7


@settings(max_examples=25, deadline=None)
@given(alphas, st.dictionaries(st.sampled_from(partitions_up_to(3, 3)), st.integers(-5, 5), max_size=4))
def test_expansion_roundtrip(alpha, coeffs):
    coeffs = {k: Fraction(v) for k, v in coeffs.items() if v}
    f = from_jack_expansion(coeffs, 3, alpha, JackForm.Omega)
    assert to_jack_expansion(f, alpha, JackForm.Omega) == coeffs


def test_binomials():
    assert binom_up((2,), (1,), A) == 2
    assert binom_up((1, 1), (1,), A) == 2
    assert binom_general((2, 1), (), A) == 1
    assert binom_general((1,), (2,), A) == 0
    assert binom_down_formula((2,), (1,), A, 3) == 2
    assert binom_down_formula((1,), (0,), A, 1) == 1
    with pytest.raises(InvalidInput):
        binom_up((3,), (1,), A)


@settings(max_examples=20, deadline=None)
@given(alphas)
def test_binomial_formulas_agree(alpha):
    for mu in partitions_up_to(3, 3):
        for lam in covers_of(mu, 3):
            v = binom_up(lam, mu, alpha)
            assert binom_general(lam, mu, alpha) == v
            # lam - e_i0 for the row that is not the added one
            assert binom_down_formula(lam, tuple(mu) + (0,) * (3 - len(mu)), alpha, 3) == v


def test_binomial_counts_boxes():
    # sum over mu covered by lam of binom(lam, mu) is |lam|
    for lam in partitions_up_to(5, 4):
        if lam:
            assert sum(binom_up(lam, mu, A) for mu in covered_by(lam)) == sum(lam)


def test_pieri():
    assert pieri_phi((1,), (), 1, 1) == 1
    assert pieri_phi((2,), (1,), 3, 2) == Fraction(1, 4)
    for mu in partitions_up_to(3, 3):
        e1J = to_jack_expansion(mul_e1(jack_J(mu, 3, A)), A)
        for lam in covers_of(mu, 3):
            assert pieri_phi(lam, mu, A, 3) == e1J[lam] == pieri_phi_from_binom(lam, mu, A)


def test_pieri_off_diagram_is_zero():
    assert pieri_phi((1, 2), (1, 1), A, 2) == 0


def test_stability_under_restriction():
    for lam in partitions_up_to(4, 3):
        assert jack_J(lam, 4, A).restrict(3) == jack_J(lam, 3, A)
    assert jack_J((1, 1, 1), 4, A).restrict(2).is_zero()


def test_basis_mul_consistency():
    assert mul(jack_J((1,), 2, A), jack_J((1,), 2, A)) == (
        jack_J((2,), 2, A).scale(Fraction(1, 1 + A)) + jack_J((1, 1), 2, A).scale(A / (1 + A))
    )


@settings(max_examples=3, deadline=None)
@given(alphas)
def test_binomials_do_not_depend_on_n(alpha):
    for mu in partitions_up_to(5, 4):
        for lam in covers_of(mu, 4):
            v = binom_up(lam, mu, alpha)
            for n in (len(lam), len(lam) + 2):
                vec = tuple(mu) + (0,) * (n - len(mu))
                assert binom_down_formula(lam, vec, alpha, n) == v

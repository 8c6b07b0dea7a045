from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from jackpfq.errors import InvalidInput
from jackpfq.partitions import partitions_up_to
from jackpfq.sympoly import (
    SymPoly,
    basis_e,
    basis_h,
    basis_m,
    basis_p,
    hall_inner,
    mul,
    orbit_size,
    power,
    schur,
    to_power_sums,
)

small = st.fractions(min_value=-9, max_value=9, max_denominator=7)


@st.composite
def polys(draw, n=3, maxdeg=3):
    shapes = partitions_up_to(maxdeg, n)
    chosen = draw(st.lists(st.sampled_from(shapes), max_size=4))
    return SymPoly(n, {lam: draw(small) for lam in chosen})


def test_products():
    m1 = basis_m((1,), 2)
    assert mul(m1, m1) == basis_m((2,), 2) + basis_m((1, 1), 2).scale(2)
    assert mul(SymPoly.one(3), basis_m((2, 1), 3)) == basis_m((2, 1), 3)
    assert power(basis_e(1, 3), 2) == basis_m((2,), 3) + basis_m((1, 1), 3).scale(2)
    with pytest.raises(InvalidInput):
        mul(basis_m((1,), 2), basis_m((1,), 3))


def test_bases():
    assert basis_e(2, 3) == basis_m((1, 1), 3)
    assert basis_p(3, 2) == basis_m((3,), 2)
    assert basis_h(2, 2) == basis_m((2,), 2) + basis_m((1, 1), 2)
    assert basis_e(3, 2).is_zero()
    with pytest.raises(InvalidInput):
        basis_m((1, 1, 1), 2)


def test_evaluation():
    assert basis_m((1,), 5).eval_ones() == 5
    assert basis_m((1, 1), 3).eval_ones() == 3
    assert basis_p(2, 2).eval_point((Fraction(1, 2), Fraction(1, 3))) == Fraction(13, 36)
    assert orbit_size((2, 1), 3) == 6


@settings(max_examples=40, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert mul(f, g) == mul(g, f)
    assert mul(f, g + h) == mul(f, g) + mul(f, h)
    pt = (Fraction(1, 2), Fraction(-2, 3), Fraction(3))
    assert mul(f, g).eval_point(pt) == f.eval_point(pt) * g.eval_point(pt)


@settings(max_examples=30, deadline=None)
@given(polys())
def test_json_roundtrip(f):
    assert SymPoly.from_json(f.to_json()) == f


def test_schur_small_cases():
    assert schur((2, 1), 3) == basis_m((2, 1), 3) + basis_m((1, 1, 1), 3).scale(2)
    assert schur((1, 1), 3) == basis_e(2, 3)
    assert schur((3,), 2) == basis_h(3, 2)


def test_power_sum_expansion():
    assert to_power_sums(basis_e(2, 2)) == {(1, 1): Fraction(1, 2), (2,): Fraction(-1, 2)}
    assert to_power_sums(SymPoly.one(2)) == {(): 1}
    with pytest.raises(InvalidInput):
        to_power_sums(mul(basis_e(1, 1), basis_e(1, 1)))


def test_hall_inner_on_power_sums():
    alpha = Fraction(3, 2)
    # <p_nu, p_nu> = z_nu alpha^len(nu)
    assert hall_inner(basis_p(1, 2), basis_p(1, 2), alpha) == alpha
    p11 = mul(basis_p(1, 2), basis_p(1, 2))
    assert hall_inner(p11, p11, alpha) == 2 * alpha**2
    assert hall_inner(p11, basis_p(2, 2), alpha) == 0


def test_schur_orthonormal_at_alpha_one():
    shapes = [(3,), (2, 1), (1, 1, 1)]
    for lam in shapes:
        for mu in shapes:
            assert hall_inner(schur(lam, 3), schur(mu, 3), 1) == (lam == mu)

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from jackpfq.errors import InvalidInput
from jackpfq.partitions import (
    ParamSet,
    add_box,
    alpha_pochhammer,
    box_stats,
    conjugate,
    contains,
    covered_by,
    covers,
    covers_of,
    dominates,
    hooks,
    partition,
    partitions_of,
    partitions_up_to,
    remove_box,
    reverse_lex_order,
    rho,
    rho_skew,
)

A = Fraction(7, 3)
partitions_st = st.lists(st.integers(0, 6), max_size=5).map(lambda xs: partition(sorted(xs, reverse=True)))


def test_partition_strips_zeros_and_validates():
    assert partition((3, 1, 0, 0)) == (3, 1)
    assert partition((0,)) == ()
    with pytest.raises(InvalidInput):
        partition((1, 2))
    with pytest.raises(InvalidInput):
        partition((2, -1))


def test_conjugate():
    assert conjugate((7, 7, 6, 4, 4, 2, 1)) == (7, 6, 5, 5, 3, 3, 2)
    assert conjugate(()) == ()
    assert conjugate((3,)) == (1, 1, 1)


@given(partitions_st)
def test_conjugate_is_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)


def test_box_stats():
    s = box_stats((7, 7, 6, 4, 4, 2, 1), 3, 2)
    assert (s.arm, s.coarm, s.leg, s.coleg) == (4, 1, 3, 2)
    s = box_stats((1,), 1, 1)
    assert (s.arm, s.coarm, s.leg, s.coleg) == (0, 0, 0, 0)
    s = box_stats((2, 2), 1, 1)
    assert (s.arm, s.coarm, s.leg, s.coleg) == (1, 0, 1, 0)
    with pytest.raises(InvalidInput):
        box_stats((2,), 2, 1)


def test_orders():
    assert covers((2,), (1,))
    assert dominates((2,), (1, 1)) and not contains((2,), (1, 1))
    assert covers((3, 1), (2, 1))
    assert not covers((3,), (1,))


def test_cover_lists():
    assert set(covers_of((1,), 2)) == {(2,), (1, 1)}
    assert covers_of((), 1) == ((1,),)
    assert covers_of((2, 2), 2) == ((3, 2),)
    assert set(covered_by((2, 1))) == {(2,), (1, 1)}
    assert add_box((2, 2), 2) is None
    assert remove_box((2, 2), 1) is None


@given(partitions_st, st.integers(1, 5))
def test_covers_are_inverse(mu, n):
    if len(mu) > n:
        return
    for lam in covers_of(mu, n):
        assert covers(lam, mu) and mu in covered_by(lam)


def test_contents():
    a = Fraction(3, 2)
    assert rho((2,), a) == 1 and rho_skew((2,), (1,), a) == 1
    assert rho((1, 1), a) == -1 / a and rho_skew((1, 1), (1,), a) == -1 / a


def test_alpha_pochhammer():
    a = Fraction(5, 7)
    assert alpha_pochhammer(a, (3,), A) == a * (a + 1) * (a + 2)
    assert alpha_pochhammer(a, (), A) == 1
    assert alpha_pochhammer(Fraction(1, 2), (1, 1), 2) == 0


@given(st.fractions(min_value=-5, max_value=5, max_denominator=9), partitions_st)
def test_pochhammer_ratio_over_a_cover(a, mu):
    for lam in covers_of(mu, 6):
        assert alpha_pochhammer(a, lam, A) == alpha_pochhammer(a, mu, A) * (a + rho_skew(lam, mu, A))


def test_hooks():
    h = hooks((1,), A)
    assert (h.c, h.cprime, h.j) == (1, A, A)
    assert hooks((1,), A).j / hooks((2,), A).j == 1 / (2 * A * (A + 1))
    assert hooks((1,), A).j / hooks((1, 1), A).j == 1 / (2 * (A + 1))


def test_reverse_lex_order():
    assert reverse_lex_order(6, 6) == (
        (6,), (5, 1), (4, 2), (4, 1, 1), (3, 3), (3, 2, 1), (3, 1, 1, 1),
        (2, 2, 2), (2, 2, 1, 1), (2, 1, 1, 1, 1), (1, 1, 1, 1, 1, 1),
    )
    assert reverse_lex_order(0, 3) == ((),)
    assert reverse_lex_order(2, 1) == ((2,),)


def test_enumeration_counts():
    assert [len(list(partitions_of(d))) for d in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert len(partitions_up_to(5, 3)) == 1 + 1 + 2 + 3 + 4 + 5


def test_paramset():
    P = ParamSet(2, (1, 2), (3,), 4)
    assert (P.p, P.q, P.n) == (2, 1, 4)
    assert P.with_n(1).n == 1 and P.with_n(1).upper == P.upper
    with pytest.raises(InvalidInput):
        ParamSet(0, (), (), 2)

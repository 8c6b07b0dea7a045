"""Partitions, box statistics, orders and alpha-Pochhammer symbols.

A partition is a plain tuple of positive integers in weakly decreasing
order; the zero partition is ``()``.  Use :func:`partition` to canonicalize
anything else (it strips trailing zeros).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .errors import InvalidInput
from .scalar import pochhammer

Partition = tuple


def partition(parts: Sequence[int]) -> Partition:
    """Canonical form of ``parts``; raises if it is not weakly decreasing."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p < 0 for p in parts):
        raise InvalidInput(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise InvalidInput(f"{parts} is not weakly decreasing")
    return parts


def is_partition(parts: Sequence[int]) -> bool:
    try:
        partition(parts)
    except InvalidInput:
        return False
    return True


def size(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def part(lam: Partition, i: int) -> int:
    """``lam_i`` with 1-based ``i``; rows past the length are zero."""
    return lam[i - 1] if i <= len(lam) else 0


@lru_cache(maxsize=None)
def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def boxes(lam: Partition) -> Iterator[tuple[int, int]]:
    """Cells ``(i, j)`` of the Young diagram, 1-based, row by row."""
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            yield i, j


class BoxStats(NamedTuple):
    arm: int
    coarm: int
    leg: int
    coleg: int


def box_stats(lam: Partition, i: int, j: int) -> BoxStats:
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise InvalidInput(f"box ({i}, {j}) is not in {lam}")
    conj = conjugate(lam)
    return BoxStats(lam[i - 1] - j, j - 1, conj[j - 1] - i, i - 1)


class Relations(NamedTuple):
    contains: bool
    covers: bool
    dominates: bool


def contains(lam: Partition, mu: Partition) -> bool:
    return len(mu) <= len(lam) and all(l >= m for l, m in zip(lam, mu))


def covers(lam: Partition, mu: Partition) -> bool:
    return sum(lam) == sum(mu) + 1 and contains(lam, mu)


def dominates(lam: Partition, mu: Partition) -> bool:
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += part(lam, i + 1)
        b += part(mu, i + 1)
        if a < b:
            return False
    return True


def relations(lam: Partition, mu: Partition) -> Relations:
    return Relations(contains(lam, mu), covers(lam, mu), dominates(lam, mu))


def add_box(mu: Partition, i: int) -> Partition | None:
    """``mu + eps_i`` if that is a partition, else ``None``."""
    if i > len(mu) + 1:
        return None
    if i <= len(mu):
        if i > 1 and mu[i - 2] == mu[i - 1]:
            return None
        return mu[: i - 1] + (mu[i - 1] + 1,) + mu[i:]
    return mu + (1,)


def remove_box(lam: Partition, i: int) -> Partition | None:
    """``lam - eps_i`` if that is a partition, else ``None``."""
    if not 1 <= i <= len(lam):
        return None
    if i < len(lam) and lam[i] == lam[i - 1]:
        return None
    out = lam[: i - 1] + (lam[i - 1] - 1,) + lam[i:]
    return partition(out)


@lru_cache(maxsize=None)
def covers_of(mu: Partition, n: int) -> tuple[Partition, ...]:
    """Partitions of length at most ``n`` covering ``mu``, by added row."""
    if len(mu) > n:
        raise InvalidInput(f"{mu} has more than {n} parts")
    out = []
    for i in range(1, min(len(mu) + 1, n) + 1):
        lam = add_box(mu, i)
        if lam is not None:
            out.append(lam)
    return tuple(out)


@lru_cache(maxsize=None)
def covered_by(lam: Partition) -> tuple[Partition, ...]:
    """Partitions ``mu`` with ``lam`` covering ``mu``, by removed row."""
    out = []
    for i in range(1, len(lam) + 1):
        mu = remove_box(lam, i)
        if mu is not None:
            out.append(mu)
    return tuple(out)


def added_row(lam: Partition, mu: Partition) -> int:
    """Row index of the single box of ``lam / mu``."""
    if not covers(lam, mu):
        raise InvalidInput(f"{lam} does not cover {mu}")
    for i in range(1, len(lam) + 1):
        if part(lam, i) != part(mu, i):
            return i
    raise AssertionError("unreachable")


def rho(lam: Partition, alpha) -> Fraction:
    """Sum of alpha-contents of the boxes of ``lam``."""
    alpha = Fraction(alpha)
    total = Fraction(0)
    for i, li in enumerate(lam, start=1):
        total += Fraction(li * (li - 1), 2) - Fraction(li * (i - 1)) / alpha
    return total


def rho_skew(lam: Partition, mu: Partition, alpha) -> Fraction:
    """alpha-content of the box ``lam / mu`` (for ``lam`` covering ``mu``)."""
    i = added_row(lam, mu)
    return Fraction(lam[i - 1] - 1) - Fraction(i - 1) / Fraction(alpha)


def alpha_pochhammer(a, lam: Partition, alpha) -> Fraction:
    """Generalized Pochhammer symbol ``prod_i (a - (i-1)/alpha)_{lam_i}``."""
    a = Fraction(a)
    alpha = Fraction(alpha)
    out = Fraction(1)
    for i, li in enumerate(lam, start=1):
        out *= pochhammer(a - Fraction(i - 1) / alpha, li)
    return out


def multi_pochhammer(values: Sequence, lam: Partition, alpha) -> Fraction:
    out = Fraction(1)
    for a in values:
        out *= alpha_pochhammer(a, lam, alpha)
    return out


def poch_ratio_check(a, lam: Partition, mu: Partition, alpha) -> Fraction:
    """``a + rho(lam/mu)``: the ratio ``(a)_lam / (a)_mu`` for a cover."""
    return Fraction(a) + rho_skew(lam, mu, alpha)


class Hooks(NamedTuple):
    c: Fraction
    cprime: Fraction
    j: Fraction


def hook_lower(lam: Partition, i: int, j: int, alpha) -> Fraction:
    """``c_lam(i, j) = arm * alpha + leg + 1``."""
    s = box_stats(lam, i, j)
    return s.arm * Fraction(alpha) + s.leg + 1


def hook_upper(lam: Partition, i: int, j: int, alpha) -> Fraction:
    """``c'_lam(i, j) = (arm + 1) * alpha + leg``."""
    s = box_stats(lam, i, j)
    return (s.arm + 1) * Fraction(alpha) + s.leg


@lru_cache(maxsize=None)
def hooks(lam: Partition, alpha) -> Hooks:
    alpha = Fraction(alpha)
    c = cp = Fraction(1)
    for i, j in boxes(lam):
        c *= hook_lower(lam, i, j, alpha)
        cp *= hook_upper(lam, i, j, alpha)
    return Hooks(c, cp, c * cp)


def partitions_of(d: int, n: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``d`` with at most ``n`` parts, in reverse-lex order."""
    if max_part is None:
        max_part = d
    if d == 0:
        yield ()
        return
    if n is not None and n <= 0:
        return
    for first in range(min(d, max_part), 0, -1):
        rest_n = None if n is None else n - 1
        for rest in partitions_of(d - first, rest_n, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def reverse_lex_order(d: int, n: int) -> tuple[Partition, ...]:
    """All partitions of ``d`` of length at most ``n``, largest first."""
    if d < 0 or n < 1:
        raise InvalidInput("need d >= 0 and n >= 1")
    return tuple(partitions_of(d, n))


def partitions_up_to(maxdeg: int, n: int) -> list[Partition]:
    """Partitions of size ``0..maxdeg`` and length at most ``n``, graded."""
    out = []
    for d in range(maxdeg + 1):
        out.extend(reverse_lex_order(d, n))
    return out


def lex_key(lam: Partition, width: int) -> tuple:
    """Sort key that realizes reverse-lex order (descending under ``reverse``)."""
    return tuple(part(lam, i) for i in range(1, width + 1))


@dataclass(frozen=True)
class ParamSet:
    """Instantiated parameters ``alpha``, ``a = (a_1..a_p)``, ``b = (b_1..b_q)``, ``n``."""

    alpha: Fraction
    upper: tuple = field(default=())
    lower: tuple = field(default=())
    n: int = 1

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "upper", tuple(Fraction(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(Fraction(b) for b in self.lower))
        if self.alpha == 0:
            raise InvalidInput("alpha must be nonzero")
        if self.n < 1:
            raise InvalidInput("n must be positive")

    @property
    def p(self) -> int:
        return len(self.upper)

    @property
    def q(self) -> int:
        return len(self.lower)

    def with_n(self, n: int) -> "ParamSet":
        return ParamSet(self.alpha, self.upper, self.lower, n)

"""Exact rationals and truncated univariate power series.

All coefficients in this package are :class:`fractions.Fraction` values;
nothing is ever rounded.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidInput, NonInvertible

Rational = Fraction


def rat(num, den=1) -> Fraction:
    """Return ``num/den`` in lowest terms with a positive denominator.

    >>> rat(3, -6)
    Fraction(-1, 2)
    """
    if den == 0:
        raise InvalidInput("zero denominator")
    return Fraction(num, den)


def parse_rational(token: str) -> Fraction:
    """Parse ``"p/q"`` or an integer literal."""
    text = token.strip()
    try:
        if "/" in text:
            num, den = text.split("/")
            return rat(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError):
        raise InvalidInput(f"malformed rational literal: {token!r}") from None


def format_rational(x) -> str:
    """Serialize as ``"num/den"``, omitting the denominator when it is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def pochhammer(a, m: int) -> Fraction:
    """Rising factorial ``a (a+1) ... (a+m-1)``."""
    out = Fraction(1)
    a = Fraction(a)
    for k in range(m):
        out *= a + k
    return out


def elementary(values: Sequence, r: int) -> Fraction:
    """Elementary symmetric polynomial ``e_r`` of a finite list of scalars."""
    if r < 0 or r > len(values):
        return Fraction(0)
    # e_0..e_r by the usual one-pass recurrence
    e = [Fraction(1)] + [Fraction(0)] * r
    for v in values:
        for k in range(r, 0, -1):
            e[k] += e[k - 1] * v
    return e[r]


def complete_homogeneous(values: Sequence, r: int) -> Fraction:
    """Complete homogeneous symmetric polynomial ``h_r`` of scalars."""
    if r < 0:
        return Fraction(0)
    h = [Fraction(1)] + [Fraction(0)] * r
    for v in values:
        for k in range(1, r + 1):
            h[k] += h[k - 1] * v
    return h[r]


@dataclass(frozen=True)
class UniSeries:
    """Power series ``c_0 + c_1 s + ... + c_order s^order`` truncated at ``order``."""

    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "coefficients", tuple(Fraction(c) for c in self.coefficients)
        )
        if not self.coefficients:
            raise InvalidInput("a series needs at least the constant term")

    @classmethod
    def from_coefficients(cls, coeffs: Iterable, order: int) -> "UniSeries":
        """Pad with zeros or truncate ``coeffs`` to exactly ``order + 1`` terms."""
        coeffs = list(coeffs)[: order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c, order: int) -> "UniSeries":
        return cls.from_coefficients([c], order)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients[k]

    def __add__(self, other: "UniSeries") -> "UniSeries":
        _check_orders(self, other)
        return UniSeries(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "UniSeries") -> "UniSeries":
        _check_orders(self, other)
        return UniSeries(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def scale(self, c) -> "UniSeries":
        c = Fraction(c)
        return UniSeries(tuple(c * a for a in self.coefficients))

    def __mul__(self, other: "UniSeries") -> "UniSeries":
        return ps_mul(self, other)

    def __repr__(self):
        body = ", ".join(format_rational(c) for c in self.coefficients)
        return f"UniSeries([{body}])"


def _check_orders(a: UniSeries, b: UniSeries) -> None:
    if a.order != b.order:
        raise InvalidInput(f"series orders differ: {a.order} != {b.order}")


def ps_mul(a: UniSeries, b: UniSeries) -> UniSeries:
    """Cauchy product truncated at the common order."""
    _check_orders(a, b)
    n = a.order
    out = [Fraction(0)] * (n + 1)
    for i, ai in enumerate(a.coefficients):
        if ai == 0:
            continue
        for j in range(n + 1 - i):
            out[i + j] += ai * b.coefficients[j]
    return UniSeries(tuple(out))


def ps_inv(a: UniSeries) -> UniSeries:
    """Multiplicative inverse of a series with nonzero constant term."""
    a0 = a.coefficients[0]
    if a0 == 0:
        raise NonInvertible("constant term is zero")
    n = a.order
    out = [Fraction(0)] * (n + 1)
    out[0] = 1 / a0
    for k in range(1, n + 1):
        acc = sum(a.coefficients[i] * out[k - i] for i in range(1, k + 1))
        out[k] = -acc / a0
    return UniSeries(tuple(out))


def ps_linear(c0, c1, order: int) -> UniSeries:
    """The series ``c0 + c1 s``."""
    return UniSeries.from_coefficients([c0, c1], order)


def ps_pow(a: UniSeries, k: int) -> UniSeries:
    out = UniSeries.constant(1, a.order)
    for _ in range(k):
        out = ps_mul(out, a)
    return out

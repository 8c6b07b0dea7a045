"""Differential operators on symmetric polynomials.

Everything here acts on :class:`~jackpfq.sympoly.SymPoly` values.  The
primitive building block is :class:`DiffOp`, a linear combination of

* ``sum_i x_i^k d_i^d`` (single-variable terms), and
* ``sum_{i != j} x_i^p x_j^q / (x_i - x_j) d_i^d`` (pair terms).

Pair terms are never formed as rational functions.  The ordered pair
``(i, j)`` acting on ``x^eta`` is matched with ``(j, i)`` acting on the
monomial with ``eta_i, eta_j`` swapped; together they give
``(u^P v^Q - u^Q v^P) / (u - v)``, which telescopes to a polynomial.
Since the input is symmetric, each member of the matched couple can carry
half of that polynomial, so monomials are processed independently.

On top of :class:`DiffOp` sits a small expression tree (:class:`OpExpr`)
with atoms ``E_r``, the Laplace-Beltrami operator ``box``, multiplication by
``e_1``, and the combinators sum, scalar multiple, composition, commutator
and iterated commutator.
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidInput
from .partitions import ParamSet
from .scalar import elementary
from .sympoly import SymPoly, is_decreasing


def _falling(a: int, d: int) -> int:
    out = 1
    for k in range(d):
        out *= a - k
    return out


def telescope(P: int, Q: int) -> list[tuple[int, int, int]]:
    """``(u^P v^Q - u^Q v^P) / (u - v)`` as ``[(sign, exp_u, exp_v), ...]``."""
    if P == Q:
        return []
    sign = 1
    if P < Q:
        P, Q, sign = Q, P, -1
    return [(sign, k, P + Q - 1 - k) for k in range(Q, P)]


@dataclass(frozen=True)
class DiffOp:
    """Linear combination of single-variable and pair terms (see module doc).

    ``singles`` holds ``(coef, k, d)`` for ``coef * sum_i x_i^k d_i^d``;
    ``pairs`` holds ``(coef, p, q, d)`` for
    ``coef * sum_{i != j} x_i^p x_j^q / (x_i - x_j) d_i^d``;
    ``constant`` is a multiple of the identity.
    """

    singles: tuple = ()
    pairs: tuple = ()
    constant: Fraction = Fraction(0)

    def __add__(self, other: "DiffOp") -> "DiffOp":
        return DiffOp(self.singles + other.singles, self.pairs + other.pairs,
                      Fraction(self.constant) + Fraction(other.constant))

    def scale(self, c) -> "DiffOp":
        c = Fraction(c)
        return DiffOp(
            tuple((c * co, k, d) for co, k, d in self.singles),
            tuple((c * co, p, q, d) for co, p, q, d in self.pairs),
            c * Fraction(self.constant),
        )

    @property
    def degree_shift(self) -> int:
        shifts = {k - d for _, k, d in self.singles} | {p + q - 1 - d for _, p, q, d in self.pairs}
        if self.constant:
            shifts.add(0)
        if len(shifts) > 1:
            raise InvalidInput("operator is not homogeneous")
        return shifts.pop() if shifts else 0

    def apply(self, f: SymPoly) -> SymPoly:
        n = f.n
        out = defaultdict(Fraction)
        full = f.expand()
        singles = [(Fraction(c), k, d) for c, k, d in self.singles if c != 0]
        pairs = [(Fraction(c), p, q, d) for c, p, q, d in self.pairs if c != 0]
        for eta, c_eta in full.items():
            for co, k, d in singles:
                for i in range(n):
                    a = eta[i]
                    if a < d:
                        continue
                    tgt = eta[:i] + (a - d + k,) + eta[i + 1:]
                    if is_decreasing(tgt):
                        out[tgt] += co * c_eta * _falling(a, d)
            for co, p, q, d in pairs:
                for i in range(n):
                    a = eta[i]
                    if a < d:
                        continue
                    weight = co * c_eta * _falling(a, d) / 2
                    P = p + a - d
                    for j in range(n):
                        if j == i:
                            continue
                        Q = q + eta[j]
                        for sign, ei, ej in telescope(P, Q):
                            tgt = list(eta)
                            tgt[i], tgt[j] = ei, ej
                            tgt = tuple(tgt)
                            if is_decreasing(tgt):
                                out[tgt] += sign * weight
        result = SymPoly.from_exponents(n, out)
        if self.constant:
            result = result + f.scale(self.constant)
        return result


def euler_op(r: int) -> DiffOp:
    """``E_r = sum_i x_i^{r-1} d_i``."""
    if r < 1:
        raise InvalidInput("E_r needs r >= 1")
    return DiffOp(singles=((Fraction(1), r - 1, 1),))


def box_op(alpha) -> DiffOp:
    """Laplace-Beltrami operator ``1/2 sum x_i^2 d_i^2 + 1/alpha sum x_i x_j/(x_i - x_j) d_i``."""
    alpha = Fraction(alpha)
    return DiffOp(singles=((Fraction(1, 2), 2, 2),), pairs=((1 / alpha, 1, 1, 1),))


def mul_e1(f: SymPoly) -> SymPoly:
    """Multiplication by ``e_1 = x_1 + ... + x_n``."""
    n = f.n
    out = defaultdict(Fraction)
    for eta, c in f.expand().items():
        for i in range(n):
            tgt = eta[:i] + (eta[i] + 1,) + eta[i + 1:]
            if is_decreasing(tgt):
                out[tgt] += c
    return SymPoly.from_exponents(n, out)


def apply_E(r: int, f: SymPoly) -> SymPoly:
    return euler_op(r).apply(f)


def apply_box(f: SymPoly, alpha) -> SymPoly:
    return box_op(alpha).apply(f)


# expression trees -----------------------------------------------------


class OpExpr:
    """Composable operator expression; apply with ``expr.apply(f, alpha)``."""

    degree_shift: int = 0

    def apply(self, f: SymPoly, alpha) -> SymPoly:  # pragma: no cover - abstract
        raise NotImplementedError

    def __call__(self, f: SymPoly, alpha) -> SymPoly:
        return self.apply(f, alpha)

    def __add__(self, other: "OpExpr") -> "OpExpr":
        return Sum((self, other))

    def __sub__(self, other: "OpExpr") -> "OpExpr":
        return Sum((self, Scaled(Fraction(-1), other)))

    def __neg__(self) -> "OpExpr":
        return Scaled(Fraction(-1), self)

    def __rmul__(self, c) -> "OpExpr":
        return Scaled(Fraction(c), self)

    def __matmul__(self, other: "OpExpr") -> "OpExpr":
        return Compose(self, other)


@dataclass(frozen=True, eq=True)
class E(OpExpr):
    r: int

    @property
    def degree_shift(self):
        return self.r - 2

    def apply(self, f, alpha):
        return apply_E(self.r, f)

    def __str__(self):
        return f"E{self.r}"


@dataclass(frozen=True, eq=True)
class Box(OpExpr):
    degree_shift = 0

    def apply(self, f, alpha):
        return apply_box(f, alpha)

    def __str__(self):
        return "box"


@dataclass(frozen=True, eq=True)
class MulE1(OpExpr):
    degree_shift = 1

    def apply(self, f, alpha):
        return mul_e1(f)

    def __str__(self):
        return "e1"


@dataclass(frozen=True, eq=True)
class Identity(OpExpr):
    degree_shift = 0

    def apply(self, f, alpha):
        return f

    def __str__(self):
        return "1"


@dataclass(frozen=True, eq=True)
class Custom(OpExpr):
    """Wrap a fixed :class:`DiffOp` (its coefficients may already encode alpha)."""

    op: DiffOp
    name: str = "custom"

    @property
    def degree_shift(self):
        return self.op.degree_shift

    def apply(self, f, alpha):
        return self.op.apply(f)

    def __str__(self):
        return self.name


@dataclass(frozen=True, eq=True)
class Scaled(OpExpr):
    c: Fraction
    inner: OpExpr

    @property
    def degree_shift(self):
        return self.inner.degree_shift

    def apply(self, f, alpha):
        if self.c == 0:
            return SymPoly.zero(f.n)
        return self.inner.apply(f, alpha).scale(self.c)

    def __str__(self):
        return f"({self.c})*{self.inner}"


@dataclass(frozen=True, eq=True)
class Sum(OpExpr):
    terms: tuple

    @property
    def degree_shift(self):
        shifts = {t.degree_shift for t in self.terms}
        if len(shifts) != 1:
            raise InvalidInput("sum of operators with different degree shifts")
        return shifts.pop()

    def apply(self, f, alpha):
        out = SymPoly.zero(f.n)
        for t in self.terms:
            out = out + t.apply(f, alpha)
        return out

    def __str__(self):
        return " + ".join(str(t) for t in self.terms)


@dataclass(frozen=True, eq=True)
class Compose(OpExpr):
    """``outer`` after ``inner``."""

    outer: OpExpr
    inner: OpExpr

    @property
    def degree_shift(self):
        return self.outer.degree_shift + self.inner.degree_shift

    def apply(self, f, alpha):
        return self.outer.apply(self.inner.apply(f, alpha), alpha)

    def __str__(self):
        return f"({self.outer})({self.inner})"


@dataclass(frozen=True, eq=True)
class Commutator(OpExpr):
    a: OpExpr
    b: OpExpr

    @property
    def degree_shift(self):
        return self.a.degree_shift + self.b.degree_shift

    def apply(self, f, alpha):
        return self.a.apply(self.b.apply(f, alpha), alpha) - self.b.apply(self.a.apply(f, alpha), alpha)

    def __str__(self):
        return f"[{self.a},{self.b}]"


@dataclass(frozen=True, eq=True)
class AdPower(OpExpr):
    """Iterated commutator ``ad_a^r(b)``."""

    a: OpExpr
    b: OpExpr
    r: int

    @property
    def degree_shift(self):
        return self.r * self.a.degree_shift + self.b.degree_shift

    def apply(self, f, alpha):
        return apply_ad_power(self.a, self.b, self.r, f, alpha)

    def __str__(self):
        return f"ad({self.a},{self.b})^{self.r}"


def apply_ad_power(A: OpExpr, B: OpExpr, r: int, f: SymPoly, alpha) -> SymPoly:
    """``ad_A^r(B)(f) = sum_k (-1)^k C(r, k) A^{r-k} B A^k f``."""
    if r < 0:
        raise InvalidInput("negative commutator power")
    a_pows = [f]
    for _ in range(r):
        a_pows.append(A.apply(a_pows[-1], alpha))
    out = None
    for k in range(r + 1):
        term = B.apply(a_pows[k], alpha)
        for _ in range(r - k):
            term = A.apply(term, alpha)
        term = term.scale((-1) ** k * math.comb(r, k))
        out = term if out is None else out + term
    return out


def power(op: OpExpr, k: int) -> OpExpr:
    out: OpExpr = Identity()
    for _ in range(k):
        out = Compose(op, out) if not isinstance(out, Identity) else op
    return out


# lowering and raising -------------------------------------------------


def lowering_expr(lower: Sequence) -> OpExpr:
    """``L = sum_r e_{q-r}(b) ad_{-box}^r(E_1)``."""
    q = len(lower)
    terms = [Scaled(elementary(lower, q - r), AdPower(-Box(), E(1), r)) for r in range(q + 1)]
    return Sum(tuple(terms))


def raising_expr(upper: Sequence) -> OpExpr:
    """``R = sum_r e_{p-r}(a) ad_box^r(e_1)``."""
    p = len(upper)
    terms = [Scaled(elementary(upper, p - r), AdPower(Box(), MulE1(), r)) for r in range(p + 1)]
    return Sum(tuple(terms))


def _apply_weighted_ad(A: OpExpr, B: OpExpr, weights: Sequence[Fraction], f: SymPoly, alpha) -> SymPoly:
    """``sum_r weights[r] * ad_A^r(B)(f)`` sharing the powers ``A^k f``."""
    rmax = len(weights) - 1
    a_pows = [f]
    for _ in range(rmax):
        a_pows.append(A.apply(a_pows[-1], alpha))
    b_of = [B.apply(g, alpha) for g in a_pows]
    out = None
    for r, w in enumerate(weights):
        if w == 0:
            continue
        for k in range(r + 1):
            term = b_of[k]
            for _ in range(r - k):
                term = A.apply(term, alpha)
            term = term.scale(w * (-1) ** k * math.comb(r, k))
            out = term if out is None else out + term
    if out is None:
        out = SymPoly.zero(b_of[0].n)
    return out


def apply_lowering_L(params: ParamSet, f: SymPoly) -> SymPoly:
    q = params.q
    weights = [elementary(params.lower, q - r) for r in range(q + 1)]
    return _apply_weighted_ad(-Box(), E(1), weights, f, params.alpha)


def apply_raising_R(params: ParamSet, f: SymPoly) -> SymPoly:
    p = params.p
    weights = [elementary(params.upper, p - r) for r in range(p + 1)]
    return _apply_weighted_ad(Box(), MulE1(), weights, f, params.alpha)


# closed forms displayed for small cases -------------------------------


def box1_display(alpha) -> DiffOp:
    """``sum x_i d_i^2 + 1/alpha sum (x_i + x_j)/(x_i - x_j) d_i``, i.e. ``[E_1, box]``."""
    ia = 1 / Fraction(alpha)
    return DiffOp(singles=((Fraction(1), 1, 2),), pairs=((ia, 1, 0, 1), (ia, 0, 1, 1)))


def ad_box_sq_e1_display(alpha) -> DiffOp:
    """``sum (x_i^3 d_i^2 + x_i^2 d_i) + 2/alpha sum x_i^2 x_j/(x_i - x_j) d_i``."""
    return DiffOp(
        singles=((Fraction(1), 3, 2), (Fraction(1), 2, 1)),
        pairs=((2 / Fraction(alpha), 2, 1, 1),),
    )

"""Symmetric polynomials in ``n`` variables, stored in the monomial basis.

A :class:`SymPoly` maps partitions (length at most ``n``) to the coefficient
of the monomial symmetric polynomial ``m_lambda``.  Because every element
is symmetric, the coefficient of ``m_lambda`` equals the coefficient of the
single monomial ``x^lambda``; operations that act on raw exponent vectors
exploit this and only ever keep weakly decreasing exponents.
"""
from __future__ import annotations

import itertools
import math
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import InvalidInput
from .partitions import Partition, partition, reverse_lex_order


@lru_cache(maxsize=None)
def orbit(lam: Partition, n: int) -> tuple[tuple[int, ...], ...]:
    """Distinct permutations of ``lam`` padded with zeros to length ``n``."""
    if len(lam) > n:
        raise InvalidInput(f"{lam} has more than {n} parts")
    padded = tuple(lam) + (0,) * (n - len(lam))
    return tuple(sorted(set(itertools.permutations(padded)), reverse=True))


def orbit_size(lam: Partition, n: int) -> int:
    padded = tuple(lam) + (0,) * (n - len(lam))
    out = math.factorial(n)
    for _, grp in itertools.groupby(padded):
        out //= math.factorial(len(list(grp)))
    return out


def is_decreasing(eta: Sequence[int]) -> bool:
    return all(eta[i] >= eta[i + 1] for i in range(len(eta) - 1))


class SymPoly:
    """Symmetric polynomial ``sum_lambda terms[lambda] * m_lambda`` in ``n`` variables."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Partition, object] | None = None):
        if n < 1:
            raise InvalidInput("need at least one variable")
        self.n = n
        clean = {}
        for lam, c in (terms or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            lam = partition(lam)
            if len(lam) > n:
                raise InvalidInput(f"m_{lam} does not exist in {n} variables")
            clean[lam] = clean.get(lam, 0) + c
        self.terms = {k: v for k, v in clean.items() if v != 0}

    @classmethod
    def _make(cls, n: int, terms: Mapping[Partition, Fraction]) -> "SymPoly":
        """Trusted constructor: keys are canonical partitions of length <= n."""
        out = cls.__new__(cls)
        out.n = n
        out.terms = {k: v for k, v in terms.items() if v != 0}
        return out

    # construction -------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "SymPoly":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "SymPoly":
        return cls(n, {(): 1})

    @classmethod
    def from_exponents(cls, n: int, coeffs: Mapping[tuple, object]) -> "SymPoly":
        """Re-orbit a symmetric polynomial given by exponent vectors.

        Only the weakly decreasing exponent vectors are read; the caller
        guarantees the input is symmetric.
        """
        terms = {}
        for eta, c in coeffs.items():
            if c != 0 and is_decreasing(eta):
                terms[_strip(eta)] = Fraction(c)
        return cls._make(n, terms)

    # basic protocol -----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return f"SymPoly(n={self.n}, 0)"
        body = " + ".join(f"({c})*m{list(lam)}" for lam, c in sorted(self.terms.items(), key=_grade_key))
        return f"SymPoly(n={self.n}, {body})"

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, lam: Sequence[int]) -> Fraction:
        return self.terms.get(partition(lam), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    # arithmetic ---------------------------------------------------------

    def _check(self, other: "SymPoly"):
        if self.n != other.n:
            raise InvalidInput(f"variable counts differ: {self.n} != {other.n}")

    def __add__(self, other: "SymPoly") -> "SymPoly":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return SymPoly._make(self.n, out)

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + (-other)

    def __neg__(self) -> "SymPoly":
        return SymPoly._make(self.n, {k: -v for k, v in self.terms.items()})

    def scale(self, c) -> "SymPoly":
        c = Fraction(c)
        return SymPoly._make(self.n, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SymPoly):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    # grading ------------------------------------------------------------

    def degree(self) -> int:
        return max((sum(k) for k in self.terms), default=-1)

    def homogeneous(self, d: int) -> "SymPoly":
        return SymPoly._make(self.n, {k: v for k, v in self.terms.items() if sum(k) == d})

    def truncate(self, maxdeg: int) -> "SymPoly":
        return SymPoly._make(self.n, {k: v for k, v in self.terms.items() if sum(k) <= maxdeg})

    def restrict(self, m: int) -> "SymPoly":
        """Set ``x_{m+1} = ... = x_n = 0``; the result lives in ``m`` variables."""
        return SymPoly._make(m, {k: v for k, v in self.terms.items() if len(k) <= m})

    # expansion and evaluation ------------------------------------------

    def expand(self) -> dict[tuple, Fraction]:
        """Dense map from exponent vectors to coefficients."""
        out = {}
        for lam, c in self.terms.items():
            for eta in orbit(lam, self.n):
                out[eta] = c
        return out

    def eval_point(self, pt: Sequence) -> Fraction:
        if len(pt) != self.n:
            raise InvalidInput(f"need {self.n} coordinates, got {len(pt)}")
        pt = [Fraction(v) for v in pt]
        total = Fraction(0)
        for eta, c in self.expand().items():
            term = c
            for x, e in zip(pt, eta):
                if e:
                    term *= x**e
            total += term
        return total

    def eval_ones(self) -> Fraction:
        return sum((c * orbit_size(lam, self.n) for lam, c in self.terms.items()), Fraction(0))

    def to_json(self) -> dict:
        from .scalar import format_rational

        return {
            "n": self.n,
            "terms": [
                {"part": list(lam), "coef": format_rational(c)}
                for lam, c in sorted(self.terms.items(), key=_grade_key)
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SymPoly":
        from .scalar import parse_rational

        return cls(int(data["n"]), {tuple(t["part"]): parse_rational(t["coef"]) for t in data["terms"]})


def _strip(eta: tuple) -> Partition:
    end = len(eta)
    while end and eta[end - 1] == 0:
        end -= 1
    return tuple(eta[:end])


def _grade_key(item):
    lam = item[0]
    return (sum(lam), tuple(-p for p in lam))


def mul(f: SymPoly, g: SymPoly) -> SymPoly:
    """Product of two symmetric polynomials, re-expressed in the m-basis."""
    f._check(g)
    if len(f.terms) > len(g.terms):
        f, g = g, f
    g_full = g.expand()
    out = defaultdict(Fraction)
    for lam, c in f.terms.items():
        for eta in orbit(lam, f.n):
            for theta, d in g_full.items():
                s = tuple(a + b for a, b in zip(eta, theta))
                if is_decreasing(s):
                    out[s] += c * d
    return SymPoly.from_exponents(f.n, out)


def power(f: SymPoly, k: int) -> SymPoly:
    out = SymPoly.one(f.n)
    for _ in range(k):
        out = mul(out, f)
    return out


# classical bases ------------------------------------------------------


def basis_m(lam: Sequence[int], n: int) -> SymPoly:
    lam = partition(lam)
    if len(lam) > n:
        raise InvalidInput(f"m_{lam} needs at least {len(lam)} variables")
    return SymPoly(n, {lam: 1})


def basis_e(r: int, n: int) -> SymPoly:
    if r < 0:
        raise InvalidInput("negative degree")
    if r > n:
        return SymPoly.zero(n)
    return SymPoly(n, {(1,) * r: 1})


def basis_p(r: int, n: int) -> SymPoly:
    if r < 0:
        raise InvalidInput("negative degree")
    if r == 0:
        return SymPoly(n, {(): n})
    return SymPoly(n, {(r,): 1})


def basis_h(r: int, n: int) -> SymPoly:
    if r < 0:
        return SymPoly.zero(n)
    return SymPoly(n, {lam: 1 for lam in reverse_lex_order(r, n)})


def power_sum_product(nu: Partition, n: int) -> SymPoly:
    """``p_nu = p_{nu_1} p_{nu_2} ...``."""
    out = SymPoly.one(n)
    for r in nu:
        out = mul(out, basis_p(r, n))
    return out


def schur(lam: Sequence[int], n: int) -> SymPoly:
    """Schur polynomial via the Jacobi-Trudi determinant ``det(h_{lam_i - i + j})``."""
    lam = partition(lam)
    if len(lam) > n:
        raise InvalidInput(f"s_{lam} needs at least {len(lam)} variables")
    k = len(lam)
    if k == 0:
        return SymPoly.one(n)
    h = {}

    def entry(i, j):
        r = lam[i] - i + j
        if r not in h:
            h[r] = basis_h(r, n)
        return h[r]

    total = SymPoly.zero(n)
    for perm in itertools.permutations(range(k)):
        sign = _perm_sign(perm)
        term = SymPoly.one(n)
        for i, j in enumerate(perm):
            e = entry(i, j)
            if e.is_zero():
                term = None
                break
            term = mul(term, e)
        if term is not None:
            total = total + term.scale(sign)
    return total


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, cycle = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            cycle += 1
        if cycle % 2 == 0:
            sign = -sign
    return sign


# power sums and the alpha-Hall inner product --------------------------


def z_lambda(lam: Partition) -> int:
    out = 1
    for r, grp in itertools.groupby(lam):
        m = len(list(grp))
        out *= r**m * math.factorial(m)
    return out


@lru_cache(maxsize=None)
def _power_sum_table(d: int, n: int):
    nus = reverse_lex_order(d, max(d, 1))
    return {nu: power_sum_product(nu, n) for nu in nus}


def to_power_sums(f: SymPoly) -> dict[Partition, Fraction]:
    """Coefficients of ``f`` in the power-sum basis ``p_nu``.

    The change of basis is only faithful when ``n`` is at least the degree
    of ``f``; otherwise the relations of ``Lambda_n`` (``e_{n+1} = 0``)
    make it ill-defined and :class:`InvalidInput` is raised.
    """
    if f.degree() > f.n:
        raise InvalidInput(f"power-sum expansion needs n >= degree ({f.degree()} > {f.n})")
    out = {}
    for d in sorted({sum(k) for k in f.terms}):
        fd = f.homogeneous(d)
        table = _power_sum_table(d, f.n)
        # p_nu has m_mu terms only for mu coarser than nu: solve from (1^d) up
        order = list(reversed(reverse_lex_order(d, max(d, 1))))
        coeffs = {}
        for nu in order:
            acc = fd.coefficient(nu)
            for kappa, c in coeffs.items():
                acc -= c * table[kappa].coefficient(nu)
            coeffs[nu] = acc / table[nu].coefficient(nu)
        out.update({k: v for k, v in coeffs.items() if v != 0})
    return out


def hall_inner(f: SymPoly, g: SymPoly, alpha) -> Fraction:
    """alpha-Hall inner product with ``<p_lam, p_mu> = delta z_lam alpha^len(lam)``."""
    alpha = Fraction(alpha)
    pf, pg = to_power_sums(f), to_power_sums(g)
    total = Fraction(0)
    for nu, c in pf.items():
        if nu in pg:
            total += c * pg[nu] * z_lambda(nu) * alpha ** len(nu)
    return total


def eval_ones(f: SymPoly) -> Fraction:
    return f.eval_ones()


def eval_point(f: SymPoly, pt: Sequence) -> Fraction:
    return f.eval_point(pt)


def monomial_product(factors: Iterable[SymPoly]) -> SymPoly:
    factors = list(factors)
    out = SymPoly.one(factors[0].n)
    for f in factors:
        out = mul(out, f)
    return out

"""Truncated hypergeometric series in Jack polynomials.

A one-alphabet series is stored through its coefficients ``C_lam`` and
means ``sum C_lam alpha^|lam| J*_lam(x)``; a two-alphabet series means
``sum C_lam alpha^|lam| Omega_lam(x) J*_lam(y)``.  Expansions in the
monomial basis are produced on demand.

Polynomials in two alphabets ("bi-polynomials") are plain dictionaries
``{(mu, nu): coefficient}`` over the basis ``m_mu(x) m_nu(y)``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Mapping

from .errors import PoleError
from .jack import JackForm, jack, to_jack_expansion
from .partitions import ParamSet, alpha_pochhammer, partitions_up_to
from .scalar import pochhammer
from .sympoly import SymPoly, basis_p, orbit_size, power

BiPoly = dict


@dataclass(frozen=True)
class JackSeries:
    """``sum_lam coeffs[lam] alpha^|lam| J*_lam(x)`` truncated at ``maxdeg``.

    ``kind`` is ``"pFq"`` for Macdonald's series and ``"2F1hat"`` for the
    series whose denominator is the ordinary Pochhammer ``(c)_|lam|``; in the
    latter case ``params.upper = (a, b)`` and ``params.lower = (c,)``.
    """

    params: ParamSet
    maxdeg: int
    coeffs: Mapping = field(default_factory=dict)
    kind: str = "pFq"

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def alpha(self) -> Fraction:
        return self.params.alpha

    def restrict(self, m: int) -> "JackSeries":
        """The same series in the first ``m`` variables (trailing ones set to 0)."""
        coeffs = {lam: c for lam, c in self.coeffs.items() if len(lam) <= m}
        return replace(self, params=self.params.with_n(m), coeffs=coeffs)

    def to_json(self) -> dict:
        from .scalar import format_rational

        return {
            "kind": self.kind,
            "alpha": format_rational(self.alpha),
            "upper": [format_rational(a) for a in self.params.upper],
            "lower": [format_rational(b) for b in self.params.lower],
            "n": self.n,
            "maxdeg": self.maxdeg,
            "coeffs": [
                {"part": list(lam), "coef": format_rational(c)}
                for lam, c in sorted(self.coeffs.items(), key=_key)
            ],
        }


@dataclass(frozen=True)
class DiagSeries:
    """``sum_lam coeffs[lam] alpha^|lam| Omega_lam(x) J*_lam(y)`` truncated at ``maxdeg``."""

    params: ParamSet
    maxdeg: int
    coeffs: Mapping = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def alpha(self) -> Fraction:
        return self.params.alpha

    def to_json(self) -> dict:
        out = JackSeries(self.params, self.maxdeg, self.coeffs).to_json()
        out["kind"] = "pFq-two-alphabet"
        return out


def _key(item):
    lam = item[0]
    return (sum(lam), tuple(-p for p in lam))


def pochhammer_coefficient(params: ParamSet, lam) -> Fraction:
    """``(a)_lam / (b)_lam``; raises :class:`PoleError` on a vanishing denominator."""
    num = Fraction(1)
    for a in params.upper:
        num *= alpha_pochhammer(a, lam, params.alpha)
    den = Fraction(1)
    for b in params.lower:
        v = alpha_pochhammer(b, lam, params.alpha)
        if v == 0:
            raise PoleError(f"(b)_lam vanishes at lam={lam}, b={b}", partition=lam, parameter=b)
        den *= v
    return num / den


def build_pFq(params: ParamSet, maxdeg: int, alphabets: int = 1):
    """Coefficients ``C_lam = (a)_lam/(b)_lam`` for ``|lam| <= maxdeg``, ``len(lam) <= n``."""
    coeffs = {lam: pochhammer_coefficient(params, lam) for lam in partitions_up_to(maxdeg, params.n)}
    if alphabets == 1:
        return JackSeries(params, maxdeg, coeffs)
    if alphabets == 2:
        return DiagSeries(params, maxdeg, coeffs)
    raise ValueError("alphabets must be 1 or 2")


def build_2F1hat(a, b, c, n: int, alpha, maxdeg: int) -> JackSeries:
    """``C_lam = (a)_lam (b)_lam / (c)_|lam|`` with an ordinary Pochhammer below."""
    params = ParamSet(alpha, (a, b), (c,), n)
    coeffs = {}
    for lam in partitions_up_to(maxdeg, n):
        den = pochhammer(params.lower[0], sum(lam))
        if den == 0:
            raise PoleError(f"(c)_{sum(lam)} vanishes", partition=lam, parameter=params.lower[0])
        num = alpha_pochhammer(params.upper[0], lam, params.alpha) * alpha_pochhammer(
            params.upper[1], lam, params.alpha
        )
        coeffs[lam] = num / den
    return JackSeries(params, maxdeg, coeffs, kind="2F1hat")


def jack_term(lam, series) -> Fraction:
    """Scalar in front of ``J*_lam``: ``C_lam alpha^|lam|``."""
    return series.coeffs[lam] * series.alpha ** sum(lam)


def to_sympoly(series: JackSeries) -> SymPoly:
    out = SymPoly.zero(series.n)
    for lam in series.coeffs:
        c = jack_term(lam, series)
        if c:
            out = out + jack(lam, series.n, series.alpha, JackForm.Jstar).scale(c)
    return out


# bi-polynomials -------------------------------------------------------


def tensor(f: SymPoly, g: SymPoly, scale=1) -> BiPoly:
    """``f(x) g(y)`` in the bi-m basis."""
    scale = Fraction(scale)
    out = {}
    for mu, a in f.terms.items():
        for nu, b in g.terms.items():
            out[(mu, nu)] = scale * a * b
    return out


def bi_add(F: BiPoly, G: BiPoly, scale=1) -> BiPoly:
    """``F + scale * G``, dropping zeros."""
    out = dict(F)
    for k, v in G.items():
        s = out.get(k, Fraction(0)) + scale * v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def bi_swap(F: BiPoly) -> BiPoly:
    return {(nu, mu): c for (mu, nu), c in F.items()}


def diag_to_bipoly(series: DiagSeries) -> BiPoly:
    out: BiPoly = {}
    n, alpha = series.n, series.alpha
    for lam in series.coeffs:
        c = jack_term(lam, series)
        if c:
            out = bi_add(out, tensor(jack(lam, n, alpha, JackForm.Omega), jack(lam, n, alpha, JackForm.Jstar), c))
    return out


def bi_at_ones_y(F: BiPoly, n: int) -> SymPoly:
    """Set ``y = 1_n``: ``m_nu(1_n)`` is the orbit size of ``nu``."""
    acc: dict = {}
    for (mu, nu), c in F.items():
        acc[mu] = acc.get(mu, Fraction(0)) + c * orbit_size(nu, n)
    return SymPoly(n, acc)


def is_jack_diagonal(F: BiPoly, n: int, alpha) -> bool:
    """True iff ``F = sum_lam d_lam J_lam(x) J_lam(y)`` (finite sum)."""
    by_y: dict = {}
    for (mu, nu), c in F.items():
        by_y.setdefault(nu, {})[mu] = c
    # expand in x first: F = sum_{lam, nu} A[lam][nu] J_lam(x) m_nu(y)
    rows: dict = {}
    for nu, xs in by_y.items():
        for lam, a in to_jack_expansion(SymPoly(n, xs), alpha, JackForm.J).items():
            rows.setdefault(lam, {})[nu] = a
    for lam, ys in rows.items():
        expansion = to_jack_expansion(SymPoly(n, ys), alpha, JackForm.J)
        if any(kappa != lam and v for kappa, v in expansion.items()):
            return False
    return True


# independent oracles --------------------------------------------------


def exp_p1(n: int, maxdeg: int) -> SymPoly:
    """``exp(p_1)`` truncated: ``sum_k p_1^k / k!``."""
    p1 = basis_p(1, n)
    out = SymPoly.zero(n)
    for k in range(maxdeg + 1):
        out = out + power(p1, k).scale(Fraction(1, math.factorial(k)))
    return out


def one_f_zero_product(a, n: int, maxdeg: int) -> SymPoly:
    """``prod_i (1 - x_i)^{-a}`` truncated; the ``x^lam`` coefficient is ``prod (a)_{lam_i}/lam_i!``."""
    terms = {}
    for lam in partitions_up_to(maxdeg, n):
        c = Fraction(1)
        for part in lam:
            c *= pochhammer(a, part) / math.factorial(part)
        terms[lam] = c
    return SymPoly(n, terms)


def _matrices(rows, cols):
    """Nonnegative integer matrices with the given row and column sums."""
    if not rows:
        if all(c == 0 for c in cols):
            yield ()
        return
    first = rows[0]
    for row in _compositions(first, cols):
        rest = tuple(c - r for c, r in zip(cols, row))
        for tail in _matrices(rows[1:], rest):
            yield (row,) + tail


def _compositions(total, caps):
    if not caps:
        if total == 0:
            yield ()
        return
    for v in range(min(total, caps[0]) + 1):
        for tail in _compositions(total - v, caps[1:]):
            yield (v,) + tail


def cauchy_product(alpha, n: int, maxdeg: int) -> BiPoly:
    """``prod_{i,j} (1 - x_i y_j)^{-1/alpha}`` up to bidegree ``(maxdeg, maxdeg)``."""
    s = 1 / Fraction(alpha)
    out = {}
    for d in range(maxdeg + 1):
        shapes = [lam for lam in partitions_up_to(d, n) if sum(lam) == d]
        for mu in shapes:
            for nu in shapes:
                rows = tuple(mu) + (0,) * (n - len(mu))
                cols = tuple(nu) + (0,) * (n - len(nu))
                total = Fraction(0)
                for K in _matrices(rows, cols):
                    term = Fraction(1)
                    for k in itertools.chain.from_iterable(K):
                        term *= pochhammer(s, k) / math.factorial(k)
                    total += term
                if total:
                    out[(mu, nu)] = total
    return out

"""Eigenvalues of the diagonal operators: Debiard-Sekiguchi, G, H, M and N.

These operators are used only through their action on Jack expansions, so
each is represented by its eigenvalue function.  Several quantities come in
two flavours that the test-suite compares:

* a *generating-function* value, obtained by expanding a ratio of
  Debiard-Sekiguchi eigenvalues as a truncated power series in ``s``;
* a *brute-force* value, summed directly over the partitions adjacent to
  the argument with generalized binomial coefficients.

Throughout, ``w_i = lam_i - (i-1)/alpha`` for ``i = 1..n``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .errors import DegenerateParameter, InvalidInput
from .jack import binom_up, jack_eval_ones, j_norm
from .partitions import ParamSet, covered_by, covers_of, partition, rho_skew
from .scalar import (
    UniSeries,
    complete_homogeneous,
    elementary,
    ps_inv,
    ps_linear,
    ps_mul,
    ps_pow,
)


def w_vector(lam, n: int, alpha) -> list[Fraction]:
    lam = partition(lam)
    if len(lam) > n:
        raise InvalidInput(f"{lam} has more than {n} parts")
    alpha = Fraction(alpha)
    return [Fraction(lam[i] if i < len(lam) else 0) - Fraction(i) / alpha for i in range(n)]


# Debiard-Sekiguchi ----------------------------------------------------


def sekiguchi_eigenvalue(lam, t, n: int, alpha) -> Fraction:
    """Eigenvalue of ``D(t)`` on ``J_lam``: ``prod_i (w_i + t)``."""
    out = Fraction(1)
    for w in w_vector(lam, n, alpha):
        out *= w + Fraction(t)
    return out


def d_r_eigenvalue(lam, r: int, n: int, alpha) -> Fraction:
    """Eigenvalue of ``D_r`` on ``J_lam``: ``e_r(w)``."""
    if not 0 <= r <= n:
        raise InvalidInput("need 0 <= r <= n")
    return elementary(w_vector(lam, n, alpha), r)


def dtilde_eigenvalue(lam, r: int, n: int, alpha) -> Fraction:
    """``Dtilde_r = sum_k (-1)^{r-k} C(n-k, r-k) D_k``, the coefficients of ``D(t)`` in ``t+1``."""
    return sum(
        ((-1) ** (r - k) * math.comb(n - k, r - k) * d_r_eigenvalue(lam, k, n, alpha) for k in range(r + 1)),
        Fraction(0),
    )


def _ratio_series(num_coeffs, den_coeffs, order: int) -> UniSeries:
    return ps_mul(
        UniSeries.from_coefficients(num_coeffs, order),
        ps_inv(UniSeries.from_coefficients(den_coeffs, order)),
    )


def _weighted_sum(values, shift, order: int) -> list[Fraction]:
    """Coefficients of ``sum_r (-s)^r (1 + shift*s)^{n-r} values[r]``."""
    n = len(values) - 1
    base = ps_linear(1, shift, order)
    out = UniSeries.constant(0, order)
    for r, v in enumerate(values):
        mono = UniSeries.from_coefficients([0] * r + [(-1) ** r], order)
        out = out + ps_mul(mono, ps_pow(base, n - r)).scale(v)
    return list(out.coefficients)


# G and g_{r,n} --------------------------------------------------------


def g_series(mu, n: int, alpha, order: int) -> UniSeries:
    """``G_n(mu; s)`` to ``s^order`` via the ratio ``alpha D(-1/s-1/alpha) / D(-1/s)``."""
    alpha = Fraction(alpha)
    d = [d_r_eigenvalue(mu, r, n, alpha) for r in range(n + 1)]
    num = _weighted_sum(d, 1 / alpha, order)
    den = _weighted_sum(d, 0, order)
    return _ratio_series(num, den, order).scale(alpha)


def g_eigenvalue(mu, r: int, n: int, alpha) -> Fraction:
    """``g_{r,n}(mu)``: the coefficient of ``s^{r+1}`` in ``G_n(mu; s)``."""
    if r < 0:
        raise InvalidInput("r must be nonnegative")
    return g_series(mu, n, alpha, r + 1)[r + 1]


def g_closed(mu, r: int, n: int, alpha) -> Fraction:
    """``alpha sum_p (-1)^p e_p(w - 1/alpha) h_{r+1-p}(w)``."""
    alpha = Fraction(alpha)
    w = w_vector(mu, n, alpha)
    shifted = [x - 1 / alpha for x in w]
    total = Fraction(0)
    for p in range(r + 2):
        total += (-1) ** p * elementary(shifted, p) * complete_homogeneous(w, r + 1 - p)
    return alpha * total


def g_bruteforce(mu, r: int, n: int, alpha) -> Fraction:
    """``alpha sum_{lam > mu} rho^r binom (J_lam(1)/j_lam)(j_mu/J_mu(1))``."""
    mu = partition(mu)
    alpha = Fraction(alpha)
    ev_mu = jack_eval_ones(mu, n, alpha)
    total = Fraction(0)
    for lam in covers_of(mu, n):
        total += (
            rho_skew(lam, mu, alpha) ** r
            * binom_up(lam, mu, alpha)
            * jack_eval_ones(lam, n, alpha)
            / j_norm(lam, alpha)
        )
    return alpha * total * j_norm(mu, alpha) / ev_mu


# F and f_r ------------------------------------------------------------


def f_series(mu, n: int, alpha, order: int) -> UniSeries:
    """``F(mu; s) = (prod (1-(w_i-1/alpha)s)/(1-w_i s) - B_0) / (1 + n s/alpha)``."""
    alpha = Fraction(alpha)
    w = w_vector(mu, n, alpha)
    prod = UniSeries.constant(1, order)
    b0 = Fraction(1)
    for x in w:
        prod = ps_mul(prod, _ratio_series([1, -(x - 1 / alpha)], [1, -x], order))
        den = x + n / alpha
        if den == 0:
            raise DegenerateParameter("w_i + n/alpha vanishes")
        b0 *= (x + (n - 1) / alpha) / den
    diff = prod - UniSeries.constant(b0, order)
    return ps_mul(diff, ps_inv(ps_linear(1, n / alpha, order)))


def f_closed(mu, r: int, n: int, alpha) -> Fraction:
    return f_series(mu, n, alpha, r)[r]


def f_bruteforce(mu, r: int, n: int, alpha) -> Fraction:
    """``alpha sum_{lam > mu} rho^r binom j_mu / j_lam``."""
    mu = partition(mu)
    alpha = Fraction(alpha)
    total = Fraction(0)
    for lam in covers_of(mu, n):
        total += rho_skew(lam, mu, alpha) ** r * binom_up(lam, mu, alpha) / j_norm(lam, alpha)
    return alpha * total * j_norm(mu, alpha)


# H and H_r ------------------------------------------------------------


def htilde_series(lam, n: int, alpha, order: int) -> UniSeries:
    """``Htilde(lam; s)`` via ``D(-1/s-1+1/alpha) / D(-1/s-1)`` in the ``Dtilde`` basis."""
    alpha = Fraction(alpha)
    dt = [dtilde_eigenvalue(lam, r, n, alpha) for r in range(n + 1)]
    num = _weighted_sum(dt, -1 / alpha, order)
    den = _weighted_sum(dt, 0, order)
    return _ratio_series(num, den, order)


def htilde_product(lam, n: int, alpha, order: int) -> UniSeries:
    """``prod_i (1-(w_i-1+1/alpha)s)/(1-(w_i-1)s)`` expanded directly."""
    alpha = Fraction(alpha)
    out = UniSeries.constant(1, order)
    for x in w_vector(lam, n, alpha):
        out = ps_mul(out, _ratio_series([1, -(x - 1 + 1 / alpha)], [1, -(x - 1)], order))
    return out


def h_eigenvalue(lam, r: int, n: int, alpha) -> Fraction:
    """``H_r(lam) = -alpha Htilde_{r+2} - (alpha+n-1) Htilde_{r+1}``."""
    if r < 0:
        raise InvalidInput("r must be nonnegative")
    alpha = Fraction(alpha)
    ht = htilde_series(lam, n, alpha, r + 2)
    return -alpha * ht[r + 2] - (alpha + n - 1) * ht[r + 1]


def h_bruteforce(lam, r: int, alpha) -> Fraction:
    """``sum_{mu < lam} rho(lam/mu)^r binom(lam, mu)``."""
    lam = partition(lam)
    alpha = Fraction(alpha)
    return sum(
        (rho_skew(lam, mu, alpha) ** r * binom_up(lam, mu, alpha) for mu in covered_by(lam)),
        Fraction(0),
    )


# M and N --------------------------------------------------------------


def M_eigenvalue(mu, params: ParamSet, n: int | None = None) -> Fraction:
    """``sum_r e_{p-r}(a) g_{r,n}(mu)``; ``n`` defaults to ``params.n``."""
    n = params.n if n is None else n
    p = params.p
    g = g_series(mu, n, params.alpha, p + 1)
    return sum((elementary(params.upper, p - r) * g[r + 1] for r in range(p + 1)), Fraction(0))


def M_bruteforce(mu, params: ParamSet, n: int | None = None) -> Fraction:
    n = params.n if n is None else n
    mu = partition(mu)
    alpha = params.alpha
    total = Fraction(0)
    for lam in covers_of(mu, n):
        rh = rho_skew(lam, mu, alpha)
        weight = Fraction(1)
        for a in params.upper:
            weight *= rh + a
        total += weight * binom_up(lam, mu, alpha) * jack_eval_ones(lam, n, alpha) / j_norm(lam, alpha)
    return alpha * total * j_norm(mu, alpha) / jack_eval_ones(mu, n, alpha)


def N_eigenvalue(lam, params: ParamSet, n: int | None = None) -> Fraction:
    """``sum_r e_{q-r}(b) H_r(lam)``."""
    n = params.n if n is None else n
    q = params.q
    alpha = params.alpha
    ht = htilde_series(lam, n, alpha, q + 2)
    total = Fraction(0)
    for r in range(q + 1):
        h = -alpha * ht[r + 2] - (alpha + n - 1) * ht[r + 1]
        total += elementary(params.lower, q - r) * h
    return total


def N_bruteforce(lam, params: ParamSet) -> Fraction:
    lam = partition(lam)
    alpha = params.alpha
    total = Fraction(0)
    for mu in covered_by(lam):
        rh = rho_skew(lam, mu, alpha)
        weight = Fraction(1)
        for b in params.lower:
            weight *= rh + b
        total += weight * binom_up(lam, mu, alpha)
    return total


# appendix operators ---------------------------------------------------


def appendix_eigen(kind: str, lam, c) -> Fraction:
    """Scalar factors of the appendix operators.

    ``"Nhat"``: the eigenvalue ``(c+|lam|-1)|lam|`` of ``(c-1+E_2)E_2``.
    ``"Lhat_scalar"``: the factor ``c+|lam|-1`` by which ``(c+E_2)E_1``
    rescales the ``E_1``-image of a degree ``|lam|`` polynomial.
    """
    k = sum(partition(lam))
    c = Fraction(c)
    if kind == "Nhat":
        return (c + k - 1) * k
    if kind == "Lhat_scalar":
        return c + k - 1
    raise InvalidInput(f"unknown appendix operator {kind!r}")


@dataclass(frozen=True)
class EigenOp:
    """A diagonal operator on Jack expansions, given by its eigenvalue function."""

    name: str
    eigenvalue: Callable

    def apply(self, coeffs: Mapping) -> dict:
        out = {}
        for lam, c in coeffs.items():
            v = c * self.eigenvalue(lam)
            if v:
                out[lam] = v
        return out


def M_op(params: ParamSet, n: int | None = None) -> EigenOp:
    return EigenOp("M", lambda mu: M_eigenvalue(mu, params, n))


def N_op(params: ParamSet, n: int | None = None) -> EigenOp:
    return EigenOp("N", lambda lam: N_eigenvalue(lam, params, n))

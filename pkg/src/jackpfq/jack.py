"""Jack polynomials, their normalizations, and generalized binomial coefficients.

``J_lambda`` is obtained from the eigenvalue problem ``box J = rho(lambda) J``
in the monomial basis.  The operator ``box`` is triangular with respect to
dominance and its diagonal entry on ``m_mu`` is ``rho(mu)``, so the
coefficients are found by back-substitution down the dominance order.  The
leading coefficient is fixed to the hook product ``c_lambda``; with at least
``|lambda|`` variables this is the same as requiring the coefficient of
``m_{(1^k)}`` to be ``k!``.
"""
from __future__ import annotations

import math
import threading
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .errors import DegenerateParameter, InvalidInput
from .operators import apply_box
from .partitions import (
    Partition,
    added_row,
    contains,
    covered_by,
    covers,
    dominates,
    hook_lower,
    hook_upper,
    hooks,
    part,
    partition,
    reverse_lex_order,
    rho,
)
from .scalar import pochhammer
from .sympoly import SymPoly, basis_m


class JackForm(str, Enum):
    J = "J"
    Jstar = "Jstar"
    Omega = "Omega"
    C = "C"


_lock = threading.Lock()


@lru_cache(maxsize=None)
def _box_on_monomials(d: int, n: int, alpha: Fraction) -> dict:
    return {mu: apply_box(basis_m(mu, n), alpha) for mu in reverse_lex_order(d, n)}


_jack_cache: dict = {}


def jack_J(lam, n: int, alpha) -> SymPoly:
    """Integral-form Jack polynomial ``J_lambda`` in ``n`` variables."""
    lam = partition(lam)
    alpha = Fraction(alpha)
    if len(lam) > n:
        raise InvalidInput(f"J_{lam} needs at least {len(lam)} variables")
    key = (lam, n, alpha)
    cached = _jack_cache.get(key)
    if cached is not None:
        return cached
    d = sum(lam)
    box = _box_on_monomials(d, n, alpha)
    target = rho(lam, alpha)
    below = [mu for mu in reverse_lex_order(d, n) if dominates(lam, mu)]
    coeffs = {lam: hooks(lam, alpha).c}
    for nu in below:
        if nu == lam:
            continue
        gap = target - rho(nu, alpha)
        if gap == 0:
            raise DegenerateParameter(f"rho({lam}) = rho({nu}) at alpha = {alpha}")
        acc = Fraction(0)
        for mu, k in coeffs.items():
            acc += k * box[mu].coefficient(nu)
        coeffs[nu] = acc / gap
    out = SymPoly(n, coeffs)
    with _lock:
        _jack_cache[key] = out
    return out


def jack_eval_ones(lam, n: int, alpha) -> Fraction:
    """``J_lambda(1_n) = alpha^{|lambda|} (n/alpha)_lambda``."""
    lam = partition(lam)
    alpha = Fraction(alpha)
    out = Fraction(1)
    for i, li in enumerate(lam, start=1):
        out *= pochhammer(Fraction(n) / alpha - Fraction(i - 1) / alpha, li)
    return alpha ** sum(lam) * out


def j_norm(lam, alpha) -> Fraction:
    return hooks(partition(lam), Fraction(alpha)).j


def form_norm(lam, form: JackForm | str, n: int, alpha) -> Fraction:
    """Scalar ``N`` with ``Form_lambda = J_lambda / N``."""
    form = JackForm(form)
    lam = partition(lam)
    alpha = Fraction(alpha)
    if form is JackForm.J:
        return Fraction(1)
    if form is JackForm.Jstar:
        return j_norm(lam, alpha)
    if form is JackForm.Omega:
        ev = jack_eval_ones(lam, n, alpha)
        if ev == 0:
            raise InvalidInput(f"Omega_{lam} is undefined in {n} variables")
        return ev
    k = sum(lam)
    return j_norm(lam, alpha) / (alpha**k * math.factorial(k))


def jack(lam, n: int, alpha, form: JackForm | str = JackForm.J) -> SymPoly:
    """Jack polynomial in any of the four normalizations."""
    return jack_J(lam, n, alpha).scale(1 / form_norm(lam, form, n, alpha))


def convert_form(value, lam, source: JackForm | str, target: JackForm | str, n: int, alpha, beta=None):
    """Rescale ``value`` (a polynomial or scalar multiple of ``source_lambda``) to ``target``.

    The C-form is defined at ``alpha = 2/beta``; passing an inconsistent
    ``beta`` is rejected.
    """
    alpha = Fraction(alpha)
    if beta is not None and Fraction(2) / Fraction(beta) != alpha:
        raise InvalidInput("C-form requires alpha = 2/beta")
    factor = form_norm(lam, source, n, alpha) / form_norm(lam, target, n, alpha)
    if isinstance(value, SymPoly):
        return value.scale(factor)
    return Fraction(value) * factor


def from_jack_expansion(coeffs: Mapping, n: int, alpha, form: JackForm | str = JackForm.J) -> SymPoly:
    """``sum_lambda coeffs[lambda] * Form_lambda`` in the m-basis."""
    out = SymPoly.zero(n)
    for lam, c in coeffs.items():
        if c:
            out = out + jack(lam, n, alpha, form).scale(c)
    return out


def to_jack_expansion(f: SymPoly, alpha, form: JackForm | str = JackForm.J) -> dict:
    """Coefficients of ``f`` in the basis ``(Form_lambda)``; unitriangular solve."""
    alpha = Fraction(alpha)
    out = {}
    for d in sorted({sum(k) for k in f.terms}):
        rest = f.homogeneous(d)
        for lam in reverse_lex_order(d, f.n):
            c = rest.coefficient(lam)
            if c == 0:
                continue
            basis = jack(lam, f.n, alpha, form)
            coef = c / basis.coefficient(lam)
            out[lam] = coef
            rest = rest - basis.scale(coef)
        if not rest.is_zero():
            raise AssertionError("Jack expansion did not terminate")
    return out


# binomial coefficients ------------------------------------------------


def binom_up(lam, mu, alpha) -> Fraction:
    """Adjacent generalized binomial coefficient from the hook-ratio formula."""
    lam, mu = partition(lam), partition(mu)
    if not covers(lam, mu):
        raise InvalidInput(f"{lam} does not cover {mu}")
    alpha = Fraction(alpha)
    i0 = added_row(lam, mu)
    j0 = lam[i0 - 1]
    out = Fraction(1)
    for i in range(1, i0):
        den = hook_lower(mu, i, j0, alpha)
        if den == 0:
            raise DegenerateParameter("vanishing hook factor")
        out *= hook_lower(lam, i, j0, alpha) / den
    for j in range(1, j0):
        den = hook_upper(mu, i0, j, alpha)
        if den == 0:
            raise DegenerateParameter("vanishing hook factor")
        out *= hook_upper(lam, i0, j, alpha) / den
    return out


def _w(lam: Partition, n: int, alpha: Fraction) -> list[Fraction]:
    return [Fraction(part(lam, i)) - Fraction(i - 1) / alpha for i in range(1, n + 1)]


def binom_down_formula(lam, mu, alpha, n: int) -> Fraction:
    """Closed product for ``binom(lam, mu)`` with ``mu = lam - eps_{i0}``.

    Uses ``w_i = lam_i - (i-1)/alpha`` for ``i = 1..n``.  ``mu`` is any
    integer vector (it need not be a partition); the product vanishes
    exactly when it is not one.
    """
    lam = partition(lam)
    alpha = Fraction(alpha)
    if len(lam) > n or len(mu) > n:
        raise InvalidInput("more rows than variables")
    diff = [part(lam, i) - (mu[i - 1] if i <= len(mu) else 0) for i in range(1, n + 1)]
    if sorted(diff) != [0] * (n - 1) + [1]:
        raise InvalidInput(f"{tuple(mu)} is not {lam} minus a unit vector")
    i0 = diff.index(1) + 1
    w = _w(lam, n, alpha)
    out = w[i0 - 1] + Fraction(n - 1) / alpha
    for i in range(1, n + 1):
        if i == i0:
            continue
        d = w[i - 1] - w[i0 - 1]
        if d == 0:
            raise DegenerateParameter("repeated w_i")
        out *= (d + 1 / alpha) / d
    return out


_binom_cache: dict = {}


def binom_general(lam, mu, alpha) -> Fraction:
    """``binom(lam, mu)`` for any ``mu``: ``(|lam|-|mu|) b = sum_{rho < lam} b(lam,rho) b(rho,mu)``."""
    lam, mu = partition(lam), partition(mu)
    alpha = Fraction(alpha)
    if not contains(lam, mu):
        return Fraction(0)
    return _binom_rec(lam, mu, alpha)


def _binom_rec(lam, mu, alpha):
    if lam == mu:
        return Fraction(1)
    key = (lam, mu, alpha)
    if key in _binom_cache:
        return _binom_cache[key]
    total = Fraction(0)
    for r in covered_by(lam):
        if contains(r, mu):
            total += binom_up(lam, r, alpha) * _binom_rec(r, mu, alpha)
    out = total / (sum(lam) - sum(mu))
    _binom_cache[key] = out
    return out


def pieri_phi(lam, mu, alpha, n: int) -> Fraction:
    """Coefficient of ``J_lam`` in ``e_1 J_mu`` from the closed product in ``w_i = mu_i - (i-1)/alpha``.

    ``lam`` may be any integer vector ``mu + eps_i``; when it is not a
    partition the product vanishes, as it should.
    """
    mu = partition(mu)
    lam = tuple(int(x) for x in lam)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    alpha = Fraction(alpha)
    if sum(lam) != sum(mu) + 1 or len(lam) > n:
        raise InvalidInput("need |lam| = |mu| + 1 and len(lam) <= n")
    diff = [(lam[i - 1] if i <= len(lam) else 0) - part(mu, i) for i in range(1, n + 1)]
    if sorted(diff) != [0] * (n - 1) + [1]:
        raise InvalidInput(f"{lam} is not mu + eps_i")
    i0 = diff.index(1) + 1
    w = _w(mu, n, alpha)
    den = w[i0 - 1] + Fraction(n) / alpha
    if den == 0:
        raise DegenerateParameter("vanishing Pieri denominator")
    out = (1 / alpha) / den
    for i in range(1, n + 1):
        if i == i0:
            continue
        d = w[i0 - 1] - w[i - 1]
        if d == 0:
            raise DegenerateParameter("repeated w_i")
        out *= (d + 1 / alpha) / d
    return out


def pieri_phi_from_binom(lam, mu, alpha) -> Fraction:
    """``alpha * binom(lam, mu) * j_mu / j_lam``."""
    alpha = Fraction(alpha)
    return alpha * binom_up(lam, mu, alpha) * j_norm(mu, alpha) / j_norm(lam, alpha)


def clear_caches() -> None:
    """Drop memoized Jack polynomials and binomial coefficients."""
    with _lock:
        _jack_cache.clear()
        _binom_cache.clear()
    _box_on_monomials.cache_clear()

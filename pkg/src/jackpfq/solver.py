"""Uniqueness solvers and residual checks for the characterizing equations.

Solvers reconstruct the coefficients ``C_lam`` of a series from a
differential equation alone and are compared against the Pochhammer
formula.  Residual checks apply the operators to a truncated series and
report every output slice together with a flag saying whether the
truncation determines it completely.

Kinds of equations handled:

``A``      ``L^(x) - R^(y)`` on a two-alphabet series (and ``Aprime``,
           the mirror ``L^(y) - R^(x)``);
``B``      ``L - M`` in ``m`` variables for every ``m <= n``;
``C``      ``N - R``;
``Bhat``   ``(c + E_2) E_1 - M(a, b)`` for the series with ``(c)_|lam|`` below;
``Chat``   ``(c - 1 + E_2) E_2 - R(a, b)`` for the same series.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .eigen import M_eigenvalue, N_eigenvalue, appendix_eigen
from .errors import DegenerateParameter, PoleError, VerificationFailure
from .jack import JackForm, binom_up, jack, jack_eval_ones, j_norm, to_jack_expansion
from .operators import apply_E, apply_lowering_L, apply_raising_R
from .partitions import (
    ParamSet,
    add_box,
    covered_by,
    covers_of,
    partitions_up_to,
    reverse_lex_order,
    rho_skew,
)
from .scalar import format_rational
from .series import (
    DiagSeries,
    JackSeries,
    bi_add,
    build_pFq,
    exp_p1,
    jack_term,
    tensor,
    to_sympoly,
)
from .sympoly import SymPoly, mul


# residuals ------------------------------------------------------------


@dataclass
class Residual:
    """Operator image split into (bi)degree slices.

    ``slices[key]`` maps basis labels to nonzero coefficients;
    ``complete[key]`` says whether the truncation determines that slice.
    """

    label: str
    slices: dict = field(default_factory=dict)
    complete: dict = field(default_factory=dict)

    def complete_keys(self) -> list:
        return sorted(k for k, ok in self.complete.items() if ok)

    def failures(self) -> list:
        """Complete slices with a nonzero coefficient."""
        return [k for k in self.complete_keys() if self.slices.get(k)]

    def is_zero(self) -> bool:
        return not self.failures()

    def max_abs(self) -> Fraction:
        vals = [abs(v) for k in self.complete_keys() for v in self.slices.get(k, {}).values()]
        return max(vals, default=Fraction(0))

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "slices_checked": len(self.complete),
            "complete": len(self.complete_keys()),
            "nonzero_complete": [list(k) if isinstance(k, tuple) else k for k in self.failures()],
            "max_residual": format_rational(self.max_abs()),
        }


def _slice_poly(f: SymPoly, keys, is_complete: Callable[[int], bool], label: str) -> Residual:
    res = Residual(label)
    for k in keys:
        res.slices[k] = {}
        res.complete[k] = is_complete(k)
    for lam, c in f.terms.items():
        k = sum(lam)
        res.slices.setdefault(k, {})[lam] = c
        res.complete.setdefault(k, is_complete(k))
    return res


def _slice_bipoly(F: dict, keys, is_complete, label: str) -> Residual:
    res = Residual(label)
    for k in keys:
        res.slices[k] = {}
        res.complete[k] = is_complete(k)
    for (mu, nu), c in F.items():
        k = (sum(mu), sum(nu))
        res.slices.setdefault(k, {})[(mu, nu)] = c
        res.complete.setdefault(k, is_complete(k))
    return res


def _from_jack_star(coeffs: dict, n: int, alpha) -> SymPoly:
    out = SymPoly.zero(n)
    for lam, c in coeffs.items():
        if c:
            out = out + jack(lam, n, alpha, JackForm.Jstar).scale(c)
    return out


# kernels --------------------------------------------------------------


def _prod_shift(rh: Fraction, values) -> Fraction:
    out = Fraction(1)
    for v in values:
        out *= rh + v
    return out


@dataclass(frozen=True)
class _Kernels:
    """Weights of the two sides of a recursion for an adjacent pair ``lam > mu``.

    ``up(lam, mu)`` multiplies ``C_mu`` and ``down(lam, mu)`` multiplies
    ``C_lam``; both include ``binom(lam, mu)`` but not the ratio ``j_mu/j_lam``.
    """

    up: Callable
    down: Callable


def _pfq_kernels(params: ParamSet) -> _Kernels:
    al = params.alpha

    def up(lam, mu):
        return _prod_shift(rho_skew(lam, mu, al), params.upper) * binom_up(lam, mu, al)

    def down(lam, mu):
        return _prod_shift(rho_skew(lam, mu, al), params.lower) * binom_up(lam, mu, al)

    return _Kernels(up, down)


def _hat_kernels(params: ParamSet) -> _Kernels:
    al = params.alpha
    c = params.lower[0]

    def up(lam, mu):
        return _prod_shift(rho_skew(lam, mu, al), params.upper) * binom_up(lam, mu, al)

    def down(lam, mu):
        return (c + sum(mu)) * binom_up(lam, mu, al)

    return _Kernels(up, down)


def _kernels_for(series_kind: str, params: ParamSet) -> _Kernels:
    return _hat_kernels(params) if series_kind == "2F1hat" else _pfq_kernels(params)


# Theorem A ------------------------------------------------------------


def solve_theorem_A(params: ParamSet, maxdeg: int) -> DiagSeries:
    """``C_lam prod(rho + b) = C_mu prod(rho + a)`` along every cover ``lam > mu``."""
    al = params.alpha
    coeffs = {(): Fraction(1)}
    for lam in partitions_up_to(maxdeg, params.n):
        if not lam:
            continue
        value = None
        for mu in covered_by(lam):
            rh = rho_skew(lam, mu, al)
            den = _prod_shift(rh, params.lower)
            if den == 0:
                raise PoleError(f"vanishing lower factor at {lam}/{mu}", partition=lam)
            v = coeffs[mu] * _prod_shift(rh, params.upper) / den
            if value is None:
                value = v
            elif v != value:
                raise VerificationFailure(f"recursion is path dependent at {lam}")
        coeffs[lam] = value
    return DiagSeries(params, maxdeg, coeffs)


def residual_theorem_A(series: DiagSeries, variant: str = "A") -> Residual:
    """``(L^(x) - R^(y)) F`` (``variant="A"``) or ``(L^(y) - R^(x)) F`` (``"Aprime"``).

    Slices of bidegree ``(j, j+1)`` (resp. ``(j+1, j)``) are complete when
    ``j + 1 <= maxdeg``.
    """
    P, n, al, d = series.params, series.n, series.alpha, series.maxdeg
    total: dict = {}
    for lam in series.coeffs:
        c = jack_term(lam, series)
        if not c:
            continue
        om = jack(lam, n, al, JackForm.Omega)
        js = jack(lam, n, al, JackForm.Jstar)
        if variant == "A":
            total = bi_add(total, tensor(apply_lowering_L(P, om), js, c))
            total = bi_add(total, tensor(om, apply_raising_R(P, js), c), -1)
        elif variant == "Aprime":
            total = bi_add(total, tensor(om, apply_lowering_L(P, js), c))
            total = bi_add(total, tensor(apply_raising_R(P, om), js, c), -1)
        else:
            raise ValueError(f"unknown variant {variant!r}")
    if variant == "A":
        keys = [(j, j + 1) for j in range(d + 1)]
        done = lambda k: k[1] == k[0] + 1 and k[1] <= d  # noqa: E731
    else:
        keys = [(j + 1, j) for j in range(d + 1)]
        done = lambda k: k[0] == k[1] + 1 and k[0] <= d  # noqa: E731
    return _slice_bipoly(total, keys, done, f"theorem {variant}")


# Theorem C ------------------------------------------------------------


def _solve_up_recursion(params: ParamSet, maxdeg: int, kernels: _Kernels, kind: str) -> JackSeries:
    coeffs = {(): Fraction(1)}
    for lam in partitions_up_to(maxdeg, params.n):
        if not lam:
            continue
        den = Fraction(0)
        num = Fraction(0)
        for mu in covered_by(lam):
            den += kernels.down(lam, mu)
            num += coeffs[mu] * kernels.up(lam, mu)
        if den == 0:
            raise DegenerateParameter(f"eigenvalue vanishes at {lam}")
        coeffs[lam] = num / den
    return JackSeries(params, maxdeg, coeffs, kind=kind)


def solve_theorem_C(params: ParamSet, maxdeg: int) -> JackSeries:
    """``C_lam sum_mu prod(rho+b) binom = sum_mu C_mu prod(rho+a) binom``."""
    return _solve_up_recursion(params, maxdeg, _pfq_kernels(params), "pFq")


def _raise_transport(series: JackSeries, upper) -> dict:
    """``R`` on the ``J*`` expansion: ``R(J*_mu) = alpha sum prod(rho+a) binom J*_lam``."""
    al, n = series.alpha, series.n
    out: dict = {}
    for mu in series.coeffs:
        c = jack_term(mu, series)
        for lam in covers_of(mu, n):
            w = al * _prod_shift(rho_skew(lam, mu, al), upper) * binom_up(lam, mu, al)
            out[lam] = out.get(lam, Fraction(0)) + c * w
    return out


def residual_theorem_C(series: JackSeries, mode: str = "differential") -> Residual:
    """``(N - R) F``; degrees ``<= maxdeg`` are complete.

    ``mode="differential"`` applies ``R`` to the monomial expansion;
    ``mode="transport"`` applies it to the Jack expansion.  For the
    ``2F1hat`` series ``N`` is ``(c - 1 + E_2) E_2`` and ``R`` uses ``(a, b)``.
    """
    P, n, al, d = series.params, series.n, series.alpha, series.maxdeg
    hat = series.kind == "2F1hat"
    raise_params = ParamSet(al, P.upper, (), n)
    f = to_sympoly(series)
    if hat and mode == "differential":
        e2f = apply_E(2, f)
        n_img = apply_E(2, e2f) + e2f.scale(P.lower[0] - 1)
    else:
        if hat:
            eig = {lam: appendix_eigen("Nhat", lam, P.lower[0]) for lam in series.coeffs}
        else:
            eig = {lam: N_eigenvalue(lam, P) for lam in series.coeffs}
        n_img = _from_jack_star({lam: jack_term(lam, series) * eig[lam] for lam in series.coeffs}, n, al)
    if mode == "differential":
        r_img = apply_raising_R(raise_params, f)
    elif mode == "transport":
        r_img = _from_jack_star(_raise_transport(series, P.upper), n, al)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    label = "theorem Chat" if hat else "theorem C"
    return _slice_poly(n_img - r_img, range(d + 2), lambda k: k <= d, label)


# Theorem B ------------------------------------------------------------


@dataclass
class EliminationStep:
    """One step of the reverse-lex elimination: the partition ``mu`` and what it fixed."""

    mu: tuple
    unknowns: tuple
    equations: str
    determinant: Fraction | None = None


def _lowering_equations(mu, coeffs_known, n, al, kernels):
    """Linear equations in the coefficients of the covers of ``mu``.

    Returns a list of ``(tag, {lam: weight}, constant)`` meaning
    ``sum weight * C_lam = constant``.  With ``J_lam(1_m)/J_mu(1_m) = m + alpha rho``
    the ``m``-variable equation reads
    ``sum_lam (C_lam K_down - C_mu K_up) (j_mu/j_lam) (m + alpha rho) = 0``.
    When at least two values ``m > len(mu)`` are available, the two
    coefficients of that affine function of ``m`` give equations (I) and (II).
    """
    cmu = coeffs_known[mu]
    lmu = len(mu)
    jmu = j_norm(mu, al)
    adj = []
    for lam in covers_of(mu, n):
        ratio = jmu / j_norm(lam, al)
        adj.append((lam, rho_skew(lam, mu, al), kernels.down(lam, mu) * ratio, kernels.up(lam, mu) * ratio))

    def eq(weight_fn, lams):
        lhs: dict = {}
        const = Fraction(0)
        for lam, rh, kd, ku in adj:
            if lam not in lams:
                continue
            w = weight_fn(rh)
            lhs[lam] = lhs.get(lam, Fraction(0)) + kd * w
            const += cmu * ku * w
        return lhs, const

    every = {lam for lam, *_ in adj}
    out = []
    if n - lmu >= 2:
        out.append(("I",) + eq(lambda rh: Fraction(1), every))
        out.append(("II",) + eq(lambda rh: rh, every))
    for m in range(max(lmu, 1), n + 1):
        lams = {lam for lam in every if len(lam) <= m}
        out.append((f"m={m}",) + eq(lambda rh, m=m: m + al * rh, lams))
    return out


def _eliminate(mu, equations, coeffs, unknowns, steps):
    """Solve for ``unknowns`` (at most two) and check every equation."""
    primary = [e for e in equations if e[0] in ("I", "II")] or list(equations)
    # substitute known values
    reduced = []
    for tag, lhs, const in primary:
        rhs = const - sum(w * coeffs[lam] for lam, w in lhs.items() if lam not in unknowns)
        reduced.append((tag, [lhs.get(u, Fraction(0)) for u in unknowns], rhs))
    det = None
    if len(unknowns) == 1:
        for tag, row, rhs in reduced:
            if row[0] != 0:
                coeffs[unknowns[0]] = rhs / row[0]
                break
        else:
            raise DegenerateParameter(f"no equation determines {unknowns[0]}")
    elif len(unknowns) == 2:
        solved = False
        for i in range(len(reduced)):
            for j in range(i + 1, len(reduced)):
                (_, r1, c1), (_, r2, c2) = reduced[i], reduced[j]
                det = r1[0] * r2[1] - r1[1] * r2[0]
                if det != 0:
                    coeffs[unknowns[0]] = (c1 * r2[1] - c2 * r1[1]) / det
                    coeffs[unknowns[1]] = (r1[0] * c2 - r2[0] * c1) / det
                    solved = True
                    break
            if solved:
                break
        if not solved:
            raise DegenerateParameter(f"singular 2x2 elimination at mu={mu}")
    elif unknowns:
        raise VerificationFailure(f"{len(unknowns)} new unknowns at mu={mu}")
    for tag, lhs, const in equations:
        if sum(w * coeffs[lam] for lam, w in lhs.items()) != const:
            raise VerificationFailure(f"equation {tag} inconsistent at mu={mu}")
    steps.append(EliminationStep(mu, tuple(unknowns), ",".join(e[0] for e in primary), det))


def _solve_lowering(params: ParamSet, maxdeg: int, kernels: _Kernels, kind: str):
    n, al = params.n, params.alpha
    coeffs = {(): Fraction(1)}
    steps: list[EliminationStep] = []
    for d in range(maxdeg):
        for mu in reverse_lex_order(d, n):
            unknowns = [lam for lam in covers_of(mu, n) if lam not in coeffs]
            lmu = len(mu)
            expected = {add_box(mu, i) for i in (lmu, lmu + 1) if 1 <= i <= n} - {None}
            if not set(unknowns) <= expected:
                raise VerificationFailure(f"unexpected new unknowns at mu={mu}")
            # order: mu + eps_l before mu + eps_{l+1}
            unknowns.sort(key=lambda lam: len(lam))
            _eliminate(mu, _lowering_equations(mu, coeffs, n, al, kernels), coeffs, unknowns, steps)
    return JackSeries(params, maxdeg, coeffs, kind=kind), steps


def solve_theorem_B_steps(params: ParamSet, maxdeg: int):
    """Reverse-lex elimination; returns the series and the list of steps."""
    return _solve_lowering(params, maxdeg, _pfq_kernels(params), "pFq")


def solve_theorem_B(params: ParamSet, maxdeg: int) -> JackSeries:
    return solve_theorem_B_steps(params, maxdeg)[0]


def two_by_two_determinant(mu, params: ParamSet, kind: str = "pFq") -> Fraction:
    """``K(l1) K(l2) (rho2 - rho1)`` for the two new covers of ``mu``."""
    al = params.alpha
    kernels = _kernels_for(kind, params)
    lmu = len(mu)
    l1, l2 = add_box(mu, lmu) if lmu else None, add_box(mu, lmu + 1)
    if l1 is None or l2 is None:
        raise ValueError(f"{mu} has fewer than two new covers")
    jmu = j_norm(mu, al)
    k1 = kernels.down(l1, mu) * jmu / j_norm(l1, al)
    k2 = kernels.down(l2, mu) * jmu / j_norm(l2, al)
    return k1 * k2 * (rho_skew(l2, mu, al) - rho_skew(l1, mu, al))


def _lower_transport(series: JackSeries, m: int) -> dict:
    """``L`` on the ``J*`` expansion in ``m`` variables."""
    P, al = series.params, series.alpha
    hat = series.kind == "2F1hat"
    out: dict = {}
    for lam in series.coeffs:
        if len(lam) > m or not lam:
            continue
        c = jack_term(lam, series)
        ev_lam = jack_eval_ones(lam, m, al) / j_norm(lam, al)
        for mu in covered_by(lam):
            ev_mu = jack_eval_ones(mu, m, al) / j_norm(mu, al)
            if hat:
                w = appendix_eigen("Lhat_scalar", lam, P.lower[0])
            else:
                w = _prod_shift(rho_skew(lam, mu, al), P.lower)
            out[mu] = out.get(mu, Fraction(0)) + c * w * binom_up(lam, mu, al) * ev_lam / ev_mu
    return out


def lowering_residual(f: SymPoly, params: ParamSet, maxdeg: int, kind: str = "pFq") -> Residual:
    """``(L - M) f`` in ``f.n`` variables; degrees ``<= maxdeg - 1`` are complete.

    ``L`` is applied by differentiation and ``M`` through its eigenvalues on
    the ``J*`` expansion of ``f``.
    """
    m, al = f.n, params.alpha
    if kind == "2F1hat":
        e1f = apply_E(1, f)
        l_img = apply_E(2, e1f) + e1f.scale(params.lower[0])
        mparams = ParamSet(al, params.upper, (), m)
    else:
        l_img = apply_lowering_L(params.with_n(m), f)
        mparams = params.with_n(m)
    expansion = to_jack_expansion(f, al, JackForm.Jstar)
    m_img = _from_jack_star({lam: c * M_eigenvalue(lam, mparams, m) for lam, c in expansion.items()}, m, al)
    label = "theorem Bhat" if kind == "2F1hat" else "theorem B"
    return _slice_poly(l_img - m_img, range(maxdeg + 1), lambda k: k <= maxdeg - 1, f"{label}, m={m}")


def residual_theorem_B(series: JackSeries, m: int, mode: str = "differential") -> Residual:
    """Residual of the ``m``-variable equation on the restricted series."""
    if not 1 <= m <= series.n:
        raise ValueError("need 1 <= m <= n")
    restricted = series.restrict(m)
    if mode == "differential":
        return lowering_residual(to_sympoly(restricted), series.params, series.maxdeg, series.kind)
    if mode != "transport":
        raise ValueError(f"unknown mode {mode!r}")
    al = series.alpha
    P = series.params
    mparams = ParamSet(al, P.upper, (), m) if series.kind == "2F1hat" else P.with_n(m)
    l_img = _from_jack_star(_lower_transport(restricted, m), m, al)
    m_img = _from_jack_star(
        {lam: jack_term(lam, restricted) * M_eigenvalue(lam, mparams, m) for lam in restricted.coeffs}, m, al
    )
    d = series.maxdeg
    return _slice_poly(l_img - m_img, range(d + 1), lambda k: k <= d - 1, f"theorem B, m={m}")


# Appendix -------------------------------------------------------------


def solve_appendix(kind: str, a, b, c, n: int, alpha, maxdeg: int) -> JackSeries:
    """``"Chat"``: the up-recursion; ``"Bhat"``: the reverse-lex elimination."""
    params = ParamSet(alpha, (a, b), (c,), n)
    kernels = _hat_kernels(params)
    if kind == "Chat":
        return _solve_up_recursion(params, maxdeg, kernels, "2F1hat")
    if kind == "Bhat":
        return _solve_lowering(params, maxdeg, kernels, "2F1hat")[0]
    raise ValueError(f"unknown appendix theorem {kind!r}")


def residual_appendix(kind: str, series: JackSeries, m: int | None = None, mode: str = "differential") -> Residual:
    if series.kind != "2F1hat":
        raise ValueError("expected a 2F1hat series")
    if kind == "Chat":
        return residual_theorem_C(series, mode)
    if kind == "Bhat":
        return residual_theorem_B(series, series.n if m is None else m, mode)
    raise ValueError(f"unknown appendix theorem {kind!r}")


# stability counterexample --------------------------------------------


@dataclass
class StabilityReport:
    G: SymPoly
    residual_m2: Residual
    residual_m1: Residual
    passes_m2: bool
    fails_m1: bool
    differs_from_0F0: bool
    first_m1_failure: int | None

    def to_json(self) -> dict:
        return {
            "passes_m2": self.passes_m2,
            "fails_m1": self.fails_m1,
            "differs_from_0F0": self.differs_from_0F0,
            "first_m1_failure_degree": self.first_m1_failure,
            "m2": self.residual_m2.to_json(),
            "m1": self.residual_m1.to_json(),
        }


def _difference_power(k: int) -> SymPoly:
    """``(x_1 - x_2)^k`` for even ``k``, as a symmetric polynomial in two variables."""
    from math import comb

    return SymPoly.from_exponents(2, {(k - i, i): (-1) ** i * comb(k, i) for i in range(k + 1)})


def stability_counterexample(maxdeg: int, h=(1, 0, 1)) -> StabilityReport:
    """``G = exp(x_1 + x_2) H(x_1 - x_2)`` with ``H(z) = sum h[k] z^k`` even.

    For ``0F0`` the lowering equation in ``m`` variables is ``(E_1 - m) F = 0``.
    Default ``H = 1 + z^2``.
    """
    if any(c for k, c in enumerate(h) if k % 2):
        raise ValueError("H must be even")
    hpoly = SymPoly.zero(2)
    for k, c in enumerate(h):
        if c:
            hpoly = hpoly + _difference_power(k).scale(c)
    G = mul(exp_p1(2, maxdeg), hpoly).truncate(maxdeg)
    params = ParamSet(Fraction(1), (), (), 2)
    res2 = _slice_poly(apply_E(1, G) - G.scale(2), range(maxdeg + 1), lambda k: k <= maxdeg - 1, "m=2")
    g1 = G.restrict(1)
    res1 = _slice_poly(apply_E(1, g1) - g1, range(maxdeg + 1), lambda k: k <= maxdeg - 1, "m=1")
    fails = res1.failures()
    differs = G != to_sympoly(build_pFq(params, maxdeg))
    return StabilityReport(G, res2, res1, res2.is_zero(), bool(fails), differs, min(fails) if fails else None)

"""The verification matrix behind ``jackpfq suite``.

Each criterion is a function returning a list of :class:`Check` records.
Random parameters come from a :class:`random.Random` seeded by the string
``"{seed}/{case key}"``, so every case is reproducible on its own and the
report does not depend on execution order.  Draws that hit a degenerate
value (a vanishing hook factor, Pochhammer symbol or determinant) are
redrawn; the number of redraws is recorded.
"""
from __future__ import annotations

import contextlib
import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable
from unittest import mock

from . import eigen, jack as jackmod, operators, series as seriesmod, solver
from .errors import DegenerateParameter, VerificationFailure
from .jack import JackForm, binom_general, binom_up, hooks, j_norm, jack, jack_J, jack_eval_ones
from .partitions import ParamSet, covers_of, partitions_up_to, rho, rho_skew
from .scalar import format_rational, pochhammer
from .sympoly import SymPoly, hall_inner, schur

SCHEMA = 1


@dataclass(frozen=True)
class Check:
    criterion: int
    key: str
    passed: bool
    detail: str = ""
    config: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "criterion": self.criterion,
            "key": self.key,
            "passed": self.passed,
            "detail": self.detail,
            "config": self.config,
        }


@dataclass(frozen=True)
class Level:
    name: str
    draws: int
    a_pairs: tuple
    a_maxdeg: int
    bc_n: int
    bc_maxdeg: int
    bc_pairs: tuple
    eig_n: int
    eig_deg: int
    eig_r: int
    lemma_n: int
    lemma_deg: int
    lemma_r: int
    series_n: int
    jack_deg: int
    euler_deg: int


_ALL_PQ = tuple((p, q) for p in range(4) for q in range(4))

LEVELS = {
    "smoke": Level(
        "smoke", 1, ((0, 0), (1, 1), (2, 1)), 3, 2, 3, ((0, 0), (1, 0), (2, 1), (3, 2)),
        2, 3, 2, 2, 3, 2, 2, 3, 4,
    ),
    "full": Level(
        "full", 3, ((0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (3, 2), (2, 2)), 4, 3, 5, _ALL_PQ,
        3, 5, 4, 3, 5, 3, 3, 5, 6,
    ),
}

MAX_REDRAWS = 25


# random parameters ----------------------------------------------------


def case_rng(seed: int, key: str) -> random.Random:
    return random.Random(f"{seed}/{key}")


def draw_alpha(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 50), rng.randint(1, 50))


def draw_value(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-50, 50), rng.randint(1, 50))


def draw_params(rng: random.Random, p: int, q: int, n: int) -> ParamSet:
    alpha = draw_alpha(rng)
    return ParamSet(alpha, tuple(draw_value(rng) for _ in range(p)), tuple(draw_value(rng) for _ in range(q)), n)


def _params_config(P: ParamSet) -> dict:
    return {
        "alpha": format_rational(P.alpha),
        "a": [format_rational(a) for a in P.upper],
        "b": [format_rational(b) for b in P.lower],
        "n": P.n,
    }


def run_drawn(criterion: int, key: str, seed: int, draws: int, make: Callable, body: Callable) -> list[Check]:
    """Run ``body(params)`` on ``draws`` generic draws from ``make(rng)``.

    ``body`` returns ``(passed, detail)``; degenerate draws are replaced.
    """
    rng = case_rng(seed, key)
    out = []
    for i in range(draws):
        redraws = 0
        while True:
            params = make(rng)
            try:
                passed, detail = body(params)
                break
            except VerificationFailure as exc:
                passed, detail = False, f"verification failure: {exc}"
                break
            except DegenerateParameter:
                redraws += 1
                if redraws > MAX_REDRAWS:
                    passed, detail = False, "too many degenerate draws"
                    break
        config = _params_config(params) if isinstance(params, ParamSet) else params
        if redraws:
            detail = (detail + f"; {redraws} redraw(s)").lstrip("; ")
        out.append(Check(criterion, f"{key}/draw{i}", passed, detail, config))
    return out


def _all(flags) -> tuple[bool, str]:
    bad = [name for name, ok in flags if not ok]
    return (not bad, "failed: " + ", ".join(bad) if bad else "ok")


# criterion 1: Theorem A ------------------------------------------------


def criterion_1(level: Level, seed: int) -> list[Check]:
    out = []
    d = level.a_maxdeg
    for p, q in level.a_pairs:
        def body(P):
            built = seriesmod.build_pFq(P, d, 2)
            flags = [("solver", solver.solve_theorem_A(P, d).coeffs == built.coeffs)]
            for variant in ("A", "Aprime"):
                flags.append((variant, solver.residual_theorem_A(built, variant).is_zero()))
            return _all(flags)

        out += run_drawn(1, f"A/p{p}q{q}/n2/d{d}", seed, level.draws, lambda rng, p=p, q=q: draw_params(rng, p, q, 2), body)
    return out


# criterion 2: Theorem B ------------------------------------------------


def _check_B(P: ParamSet, d: int):
    built = seriesmod.build_pFq(P, d)
    got, steps = solver.solve_theorem_B_steps(P, d)
    flags = [("solver", got.coeffs == built.coeffs)]
    dets_ok = True
    for st in steps:
        if len(st.unknowns) == 2:
            if not st.determinant:
                dets_ok = False
            elif st.equations.startswith("I,II"):
                dets_ok &= st.determinant == solver.two_by_two_determinant(st.mu, P)
    flags.append(("determinants", dets_ok))
    for m in range(1, P.n + 1):
        flags.append((f"residual m={m}", solver.residual_theorem_B(built, m).is_zero()))
        flags.append((f"transport m={m}", solver.residual_theorem_B(built, m, "transport").is_zero()))
    return _all(flags)


def criterion_2(level: Level, seed: int) -> list[Check]:
    n, d = level.bc_n, level.bc_maxdeg
    out = []
    for p, q in level.bc_pairs:
        out += run_drawn(
            2, f"B/p{p}q{q}/n{n}/d{d}", seed, level.draws,
            lambda rng, p=p, q=q: draw_params(rng, p, q, n), lambda P: _check_B(P, d),
        )
    return out


# criterion 3: Theorem C ------------------------------------------------


def _check_C(P: ParamSet, d: int):
    built = seriesmod.build_pFq(P, d)
    flags = [
        ("solver", solver.solve_theorem_C(P, d).coeffs == built.coeffs),
        ("residual", solver.residual_theorem_C(built).is_zero()),
        ("transport", solver.residual_theorem_C(built, "transport").is_zero()),
    ]
    return _all(flags)


def euler_residual(a, b, c, coeffs: list) -> list:
    """Coefficients of ``z(1-z)F'' + (c-(a+b+1)z)F' - abF`` for a polynomial ``F``."""
    deg = len(coeffs) - 1
    F = lambda k: coeffs[k] if 0 <= k <= deg else Fraction(0)  # noqa: E731
    out = []
    for k in range(deg + 1):
        v = (k + 1) * k * F(k + 1) - k * (k - 1) * F(k)
        v += c * (k + 1) * F(k + 1) - (a + b + 1) * k * F(k) - a * b * F(k)
        out.append(v)
    return out


def _check_euler(P: ParamSet, d: int):
    a, b = P.upper
    (c,) = P.lower
    built = seriesmod.build_pFq(P, d)
    poly = seriesmod.to_sympoly(built)
    coeffs = [poly.coefficient((k,) if k else ()) for k in range(d + 1)]
    gauss = [pochhammer(a, k) * pochhammer(b, k) / (pochhammer(c, k) * math.factorial(k)) for k in range(d + 1)]
    eul = euler_residual(a, b, c, coeffs)
    # N - R equals z times the Euler operator on every monomial z^k
    op_ok = True
    for k in range(d + 1):
        zk = SymPoly(1, {(k,) if k else (): 1})
        lhs = _n_minus_r_one_variable(P, zk)
        e = euler_residual(a, b, c, [Fraction(int(i == k)) for i in range(k + 3)])
        rhs = SymPoly(1, {(i + 1,): v for i, v in enumerate(e) if v})
        op_ok &= lhs == rhs
    flags = [
        ("gauss coefficients", coeffs == gauss),
        ("euler ode", all(v == 0 for v in eul[:d])),
        ("residual", solver.residual_theorem_C(built).is_zero()),
        ("operator identity", op_ok),
    ]
    return _all(flags)


def _n_minus_r_one_variable(P: ParamSet, f: SymPoly) -> SymPoly:
    from .jack import to_jack_expansion

    coeffs = to_jack_expansion(f, P.alpha, JackForm.J)
    nf = SymPoly.zero(1)
    for lam, c in coeffs.items():
        nf = nf + jack_J(lam, 1, P.alpha).scale(c * eigen.N_eigenvalue(lam, P))
    return nf - operators.apply_raising_R(P, f)


def criterion_3(level: Level, seed: int) -> list[Check]:
    n, d = level.bc_n, level.bc_maxdeg
    out = []
    for p, q in level.bc_pairs:
        out += run_drawn(
            3, f"C/p{p}q{q}/n{n}/d{d}", seed, level.draws,
            lambda rng, p=p, q=q: draw_params(rng, p, q, n), lambda P: _check_C(P, d),
        )
    e = level.euler_deg
    out += run_drawn(
        3, f"C/euler/p2q1/n1/d{e}", seed, level.draws,
        lambda rng: draw_params(rng, 2, 1, 1), lambda P: _check_euler(P, e),
    )
    return out


# criterion 4: stability counterexample --------------------------------


def criterion_4(level: Level, seed: int) -> list[Check]:
    rep = solver.stability_counterexample(4)
    one = solver.stability_counterexample(4, (1,))
    ok, detail = _all([
        ("passes m=2", rep.passes_m2),
        ("fails m=1 at degree 1", rep.fails_m1 and rep.first_m1_failure == 1),
        ("differs from 0F0", rep.differs_from_0F0),
        ("degree-2 slices differ", rep.G.homogeneous(2) != seriesmod.exp_p1(2, 2).homogeneous(2)),
        ("H=1 passes both", one.passes_m2 and not one.fails_m1 and not one.differs_from_0F0),
    ])
    return [Check(4, "stability/n2/d4", ok, detail, {"H": "1+z^2", "maxdeg": 4})]


# criterion 5: eigenvalue generating functions --------------------------


def _check_eigen(alpha: Fraction, n: int, deg: int, rmax: int):
    flags = {"f": True, "g": True, "g closed": True, "H": True, "special": True, "f0": True}
    for lam in partitions_up_to(deg, n):
        for r in range(rmax + 1):
            flags["f"] &= eigen.f_closed(lam, r, n, alpha) == eigen.f_bruteforce(lam, r, n, alpha)
            g = eigen.g_bruteforce(lam, r, n, alpha)
            flags["g"] &= eigen.g_eigenvalue(lam, r, n, alpha) == g
            flags["g closed"] &= eigen.g_closed(lam, r, n, alpha) == g
            flags["H"] &= eigen.h_eigenvalue(lam, r, n, alpha) == eigen.h_bruteforce(lam, r, alpha)
        flags["special"] &= (
            eigen.g_eigenvalue(lam, 0, n, alpha) == n
            and eigen.g_eigenvalue(lam, 1, n, alpha) == sum(lam)
            and eigen.g_eigenvalue(lam, 2, n, alpha) == (1 + (n - 1) / alpha) * sum(lam) + 2 * rho(lam, alpha)
            and eigen.h_eigenvalue(lam, 0, n, alpha) == sum(lam)
            and eigen.h_eigenvalue(lam, 1, n, alpha) == 2 * rho(lam, alpha)
        )
        if n > len(lam):
            flags["f0"] &= eigen.f_closed(lam, 0, n, alpha) == 1
    return _all(flags.items())


def criterion_5(level: Level, seed: int) -> list[Check]:
    out = []
    for n in range(1, level.eig_n + 1):
        out += run_drawn(
            5, f"eigen/n{n}/deg{level.eig_deg}/r{level.eig_r}", seed, level.draws,
            lambda rng: {"alpha": draw_alpha(rng)},
            lambda cfg, n=n: _check_eigen(cfg["alpha"], n, level.eig_deg, level.eig_r),
        )
    return [Check(c.criterion, c.key, c.passed, c.detail, _fmt_cfg(c.config)) for c in out]


def _fmt_cfg(cfg: dict) -> dict:
    return {k: format_rational(v) if isinstance(v, Fraction) else v for k, v in cfg.items()}


# criterion 6: commutator identities and Pieri ------------------------


def _omega_expansion(coeffs: dict, n: int, alpha, form) -> SymPoly:
    out = SymPoly.zero(n)
    for lam, c in coeffs.items():
        if c:
            out = out + jack(lam, n, alpha, form).scale(c)
    return out


def _check_lemma(alpha: Fraction, t: Fraction, n: int, deg: int, rmax: int):
    from .operators import E, Box, MulE1, apply_ad_power, apply_box, apply_E, mul_e1

    flags = {k: True for k in ("E2", "box", "E1", "exp(tE1)", "e1", "exp(te1)", "ad E1", "ad e1", "pieri", "translation")}
    pt = [Fraction(k + 2, k + 3) for k in range(n)]
    for lam in partitions_up_to(deg, n):
        J = jack_J(lam, n, alpha)
        om = jack(lam, n, alpha, JackForm.Omega)
        js = jack(lam, n, alpha, JackForm.Jstar)
        flags["E2"] &= apply_E(2, J) == J.scale(sum(lam))
        flags["box"] &= apply_box(J, alpha) == J.scale(rho(lam, alpha))
        down = {mu: binom_up(lam, mu, alpha) for mu in _covered(lam)}
        flags["E1"] &= apply_E(1, om) == _omega_expansion(down, n, alpha, JackForm.Omega)
        # exp(t E_1) on Omega_lam is a finite sum
        lhs, term = SymPoly.zero(n), om
        for k in range(sum(lam) + 1):
            lhs = lhs + term.scale(t**k / math.factorial(k))
            term = apply_E(1, term)
        rhs_coeffs = {mu: t ** (sum(lam) - sum(mu)) * binom_general(lam, mu, alpha) for mu in partitions_up_to(sum(lam), n)}
        rhs = _omega_expansion(rhs_coeffs, n, alpha, JackForm.Omega)
        flags["exp(tE1)"] &= lhs == rhs
        # the same identity as a translation of the argument
        flags["translation"] &= om.eval_point([x + t for x in pt]) == rhs.eval_point(pt)
        up = {nu: alpha * binom_up(nu, lam, alpha) for nu in covers_of(lam, n)}
        flags["e1"] &= mul_e1(js) == _omega_expansion(up, n, alpha, JackForm.Jstar)
        # exp(t e_1) J*_lam to two extra degrees
        K = 2
        lhs, term = SymPoly.zero(n), js
        for k in range(K + 1):
            lhs = lhs + term.scale(Fraction(1, math.factorial(k)) * t**k)
            term = mul_e1(term)
        rhs_coeffs = {
            nu: (t * alpha) ** (sum(nu) - sum(lam)) * binom_general(nu, lam, alpha)
            for nu in partitions_up_to(sum(lam) + K, n)
            if sum(nu) >= sum(lam)
        }
        flags["exp(te1)"] &= lhs == _omega_expansion(rhs_coeffs, n, alpha, JackForm.Jstar)
        for r in range(rmax + 1):
            img = apply_ad_power(-Box(), E(1), r, om, alpha)
            want = {mu: rho_skew(lam, mu, alpha) ** r * b for mu, b in down.items()}
            flags["ad E1"] &= img == _omega_expansion(want, n, alpha, JackForm.Omega)
            img = apply_ad_power(Box(), MulE1(), r, js, alpha)
            want = {nu: rho_skew(nu, lam, alpha) ** r * v for nu, v in up.items()}
            flags["ad e1"] &= img == _omega_expansion(want, n, alpha, JackForm.Jstar)
        for nu in covers_of(lam, n):
            flags["pieri"] &= jackmod.pieri_phi(nu, lam, alpha, n) == jackmod.pieri_phi_from_binom(nu, lam, alpha)
    return _all(flags.items())


def _covered(lam):
    from .partitions import covered_by

    return covered_by(lam)


def criterion_6(level: Level, seed: int) -> list[Check]:
    out = []
    for n in range(1, level.lemma_n + 1):
        out += run_drawn(
            6, f"lemma/n{n}/deg{level.lemma_deg}/r{level.lemma_r}", seed, level.draws,
            lambda rng: {"alpha": draw_alpha(rng), "t": draw_value(rng)},
            lambda cfg, n=n: _check_lemma(cfg["alpha"], cfg["t"], n, level.lemma_deg, level.lemma_r),
        )
    return [Check(c.criterion, c.key, c.passed, c.detail, _fmt_cfg(c.config)) for c in out]


# criterion 7: special series -----------------------------------------


def criterion_7(level: Level, seed: int) -> list[Check]:
    out = []
    for n in range(1, level.series_n + 1):
        out += run_drawn(
            7, f"0F0/n{n}/d6", seed, level.draws,
            lambda rng, n=n: draw_params(rng, 0, 0, n),
            lambda P: _all([("exp(p1)", seriesmod.to_sympoly(seriesmod.build_pFq(P, 6)) == seriesmod.exp_p1(P.n, 6))]),
        )
        out += run_drawn(
            7, f"1F0/n{n}/d5", seed, level.draws,
            lambda rng, n=n: draw_params(rng, 1, 0, n),
            lambda P: _all([(
                "product",
                seriesmod.to_sympoly(seriesmod.build_pFq(P, 5)) == seriesmod.one_f_zero_product(P.upper[0], P.n, 5),
            )]),
        )

    def cauchy(cfg):
        alpha = cfg["alpha"]
        P = ParamSet(alpha, (2 / alpha,), (), 2)
        F = seriesmod.diag_to_bipoly(seriesmod.build_pFq(P, 3, 2))
        return _all([
            ("cauchy", F == seriesmod.cauchy_product(alpha, 2, 3)),
            ("diagonal", seriesmod.is_jack_diagonal(F, 2, alpha)),
        ])

    cks = run_drawn(7, "cauchy/n2/d3", seed, level.draws, lambda rng: {"alpha": draw_alpha(rng)}, cauchy)
    return out + [Check(c.criterion, c.key, c.passed, c.detail, _fmt_cfg(c.config)) for c in cks]


# criterion 8: Jack consistency ---------------------------------------


def _check_jack(alpha: Fraction, deg: int):
    flags = {k: True for k in ("orthogonality", "J(1)", "stability", "leading", "schur")}
    big = max(deg, 1)
    for d in range(deg + 1):
        lams = list(partitions_up_to(d, big))
        lams = [lam for lam in lams if sum(lam) == d]
        for lam in lams:
            J = jack_J(lam, big, alpha)
            for mu in lams:
                want = j_norm(lam, alpha) if lam == mu else 0
                flags["orthogonality"] &= hall_inner(J, jack_J(mu, big, alpha), alpha) == want
            for n in range(len(lam), big + 1):
                Jn = jack_J(lam, n, alpha) if n else None
                if Jn is None:
                    continue
                flags["J(1)"] &= Jn.eval_ones() == jack_eval_ones(lam, n, alpha)
                flags["stability"] &= J.restrict(n) == Jn
            flags["leading"] &= J.coefficient((1,) * d) == math.factorial(d)
            flags["schur"] &= jack_J(lam, big, 1) == schur(lam, big).scale(hooks(lam, Fraction(1)).c)
    return _all(flags.items())


def criterion_8(level: Level, seed: int) -> list[Check]:
    cks = run_drawn(
        8, f"jack/deg{level.jack_deg}", seed, level.draws,
        lambda rng: {"alpha": draw_alpha(rng)}, lambda cfg: _check_jack(cfg["alpha"], level.jack_deg),
    )
    return [Check(c.criterion, c.key, c.passed, c.detail, _fmt_cfg(c.config)) for c in cks]


# criterion 9: appendix ------------------------------------------------


def _check_appendix(P: ParamSet, d: int):
    a, b = P.upper
    (c,) = P.lower
    built = seriesmod.build_2F1hat(a, b, c, 2, P.alpha, d)
    flags = [
        ("Bhat solver", solver.solve_appendix("Bhat", a, b, c, 2, P.alpha, d).coeffs == built.coeffs),
        ("Chat solver", solver.solve_appendix("Chat", a, b, c, 2, P.alpha, d).coeffs == built.coeffs),
        ("Chat residual", solver.residual_appendix("Chat", built).is_zero()),
        ("Chat transport", solver.residual_appendix("Chat", built, mode="transport").is_zero()),
    ]
    for m in (1, 2):
        flags.append((f"Bhat residual m={m}", solver.residual_appendix("Bhat", built, m).is_zero()))
        flags.append((f"Bhat transport m={m}", solver.residual_appendix("Bhat", built, m, "transport").is_zero()))
    one = seriesmod.to_sympoly(seriesmod.build_2F1hat(a, b, c, 1, P.alpha, d))
    gauss = {
        ((k,) if k else ()): pochhammer(a, k) * pochhammer(b, k) / (pochhammer(c, k) * math.factorial(k))
        for k in range(d + 1)
    }
    flags.append(("n=1 gauss", one == SymPoly(1, gauss)))
    flags.append(("n=1 Chat residual", solver.residual_appendix("Chat", seriesmod.build_2F1hat(a, b, c, 1, P.alpha, d)).is_zero()))
    return _all(flags)


def criterion_9(level: Level, seed: int) -> list[Check]:
    return run_drawn(
        9, "appendix/n2/d4", seed, level.draws,
        lambda rng: draw_params(rng, 2, 1, 2), lambda P: _check_appendix(P, 4),
    )


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
}


# fault injection -----------------------------------------------------


@contextlib.contextmanager
def corrupted_binomials():
    """Temporarily double ``binom((2,1), (2,))`` everywhere it is looked up."""
    real = jackmod.binom_up

    def fake(lam, mu, alpha):
        v = real(lam, mu, alpha)
        return 2 * v if tuple(lam) == (2, 1) and tuple(mu) == (2,) else v

    with contextlib.ExitStack() as stack:
        for mod in (jackmod, eigen, solver, sys_modules_suite()):
            stack.enter_context(mock.patch.object(mod, "binom_up", fake))
        jackmod.clear_caches()
        try:
            yield
        finally:
            jackmod.clear_caches()


def sys_modules_suite():
    import sys

    return sys.modules[__name__]


# running ------------------------------------------------------------


def run_suite(level: str = "smoke", seed: int = 0, criteria=None, fault: str | None = None) -> dict:
    """Run the matrix and return a JSON-ready report (no timing data, so it is reproducible)."""
    if level not in LEVELS:
        raise ValueError(f"unknown level {level!r}")
    lv = LEVELS[level]
    selected = sorted(criteria) if criteria else sorted(CRITERIA)
    ctx = corrupted_binomials() if fault == "binom" else contextlib.nullcontext()
    if fault not in (None, "binom"):
        raise ValueError(f"unknown fault {fault!r}")
    checks: list[Check] = []
    with ctx:
        for c in selected:
            checks += CRITERIA[c](lv, seed)
    checks.sort(key=lambda ch: (ch.criterion, ch.key))
    failures = [ch for ch in checks if not ch.passed]
    return {
        "schema": SCHEMA,
        "level": level,
        "seed": seed,
        "criteria": selected,
        "fault": fault,
        "total": len(checks),
        "failures": len(failures),
        "first_failure": failures[0].to_json() if failures else None,
        "checks": [ch.to_json() for ch in checks],
    }


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)

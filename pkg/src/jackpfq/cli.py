"""Command-line front end: ``jackpfq <subcommand> ...``.

Exit codes: 0 success, 1 usage or parameter error, 2 verification failure.
JSON reports carry ``"schema": 1`` and echo the parsed configuration.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import operators as ops
from .errors import DegenerateParameter, InvalidInput, JackError, VerificationFailure
from .jack import JackForm, binom_down_formula, binom_general, form_norm, hooks, jack, jack_eval_ones, to_jack_expansion
from .partitions import ParamSet, covers, partition
from .scalar import format_rational, parse_rational
from .series import build_2F1hat, build_pFq, diag_to_bipoly, to_sympoly
from .suite import SCHEMA, case_rng, draw_params, report_json, run_suite
from .sympoly import SymPoly

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Raises instead of exiting, and never guesses abbreviated options."""

    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        raise UsageError(message)


# literal parsing ------------------------------------------------------


def parse_partition(text: str) -> tuple:
    text = text.strip()
    if text in ("", "0", "()"):
        return ()
    try:
        return partition(int(tok) for tok in text.strip("()").split(","))
    except (ValueError, InvalidInput):
        raise UsageError(f"malformed partition literal: {text!r}") from None


def parse_rational_list(text: str | None) -> tuple:
    if not text:
        return ()
    try:
        return tuple(parse_rational(tok) for tok in text.split(","))
    except InvalidInput as exc:
        raise UsageError(str(exc)) from None


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except InvalidInput as exc:
        raise UsageError(str(exc)) from None


# operator expressions -------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|(ad|box|id|e1|E\d+|L|R)|(.))")


def _tokenize(text: str) -> list:
    out, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        num, word, sym = m.groups()
        if num:
            out.append(("num", Fraction(num)))
        elif word:
            out.append(("word", word))
        elif sym.strip():
            out.append(("sym", sym))
        pos = m.end()
    return out


class _OpParser:
    """Recursive-descent parser for operator expressions.

    Grammar::

        expr   := term (('+' | '-') term)*
        term   := unary ('*' unary)*           # scalar * op or composition
        unary  := '-' unary | power
        power  := atom ('^' INT)?              # ad(A,B)^r = ad_A^r(B)
        atom   := NUM | 'E' INT | 'box' | 'e1' | 'id' | 'L' | 'R'
                | 'ad(' expr ',' expr ')' | '[' expr ',' expr ']' | '(' expr ')'

    ``L`` and ``R`` are the lowering and raising operators for the
    parameters given on the command line.
    """

    def __init__(self, text: str, params: ParamSet):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.params = params

    def fail(self, msg):
        raise UsageError(f"bad operator expression {self.text!r}: {msg}")

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value is not None and tok[1] != value):
            self.fail(f"expected {value or kind}")
        self.i += 1
        return tok

    def parse(self) -> ops.OpExpr:
        v = self.expr()
        if self.i != len(self.toks):
            self.fail("trailing input")
        return self._as_op(v)

    def _as_op(self, v):
        return ops.Scaled(v, ops.Identity()) if isinstance(v, Fraction) else v

    def expr(self):
        v = self.term()
        while self.peek() in (("sym", "+"), ("sym", "-")):
            sign = self.take()[1]
            w = self.term()
            if isinstance(v, Fraction) and isinstance(w, Fraction):
                v = v + w if sign == "+" else v - w
            else:
                v, w = self._as_op(v), self._as_op(w)
                v = v + w if sign == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek() == ("sym", "*"):
            self.take()
            w = self.unary()
            if isinstance(v, Fraction) and isinstance(w, Fraction):
                v = v * w
            elif isinstance(v, Fraction):
                v = ops.Scaled(v, w)
            elif isinstance(w, Fraction):
                v = ops.Scaled(w, v)
            else:
                v = ops.Compose(v, w)
        return v

    def unary(self):
        if self.peek() == ("sym", "-"):
            self.take()
            v = self.unary()
            return -v
        return self.power()

    def power(self):
        v, is_ad = self.atom()
        if self.peek() == ("sym", "^"):
            self.take()
            k = self.take("num")[1]
            if k.denominator != 1:
                self.fail("exponent must be an integer")
            k = int(k)
            if is_ad:
                return ops.AdPower(v.a, v.b, k)
            if isinstance(v, Fraction):
                return v**k
            return ops.power(v, k) if k else ops.Identity()
        return v

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return val, False
        if kind == "word":
            self.take()
            if val == "ad":
                self.take("sym", "(")
                a = self._as_op(self.expr())
                self.take("sym", ",")
                b = self._as_op(self.expr())
                self.take("sym", ")")
                return ops.AdPower(a, b, 1), True
            if val == "box":
                return ops.Box(), False
            if val == "e1":
                return ops.MulE1(), False
            if val == "id":
                return ops.Identity(), False
            if val == "L":
                return ops.lowering_expr(self.params.lower), False
            if val == "R":
                return ops.raising_expr(self.params.upper), False
            r = int(val[1:])
            if r < 1:
                self.fail("E_r needs r >= 1")
            return ops.E(r), False
        if (kind, val) == ("sym", "["):
            self.take()
            a = self._as_op(self.expr())
            self.take("sym", ",")
            b = self._as_op(self.expr())
            self.take("sym", "]")
            return ops.Commutator(a, b), False
        if (kind, val) == ("sym", "("):
            self.take()
            v = self.expr()
            self.take("sym", ")")
            return v, False
        self.fail(f"unexpected token {val!r}")


def parse_op(text: str, params: ParamSet) -> ops.OpExpr:
    return _OpParser(text, params).parse()


# output helpers -------------------------------------------------------


def _ptext(lam) -> str:
    return "(" + ",".join(str(x) for x in lam) + ")"


def poly_json(f: SymPoly) -> dict:
    return f.to_json()


def expansion_json(coeffs: dict) -> list:
    items = sorted(coeffs.items(), key=lambda kv: (sum(kv[0]), tuple(-p for p in kv[0])))
    return [{"part": list(lam), "coef": format_rational(c)} for lam, c in items if c]


def poly_text(f: SymPoly, basis="m") -> str:
    items = sorted(f.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-p for p in kv[0])))
    if not items:
        return "0"
    return " + ".join(f"({format_rational(c)})*{basis}{list(lam)}" for lam, c in items)


def _config(args) -> dict:
    out = {}
    for k, v in sorted(vars(args).items()):
        if k == "func":
            continue
        out[k] = v
    return out


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        body = {"schema": SCHEMA, "config": _config(args)}
        body.update(payload)
        data = json.dumps(body, indent=2, sort_keys=True)
    else:
        data = text
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(data + "\n")
    else:
        print(data)


def _params(args, n=None) -> ParamSet:
    upper = parse_rational_list(getattr(args, "a", None))
    lower = parse_rational_list(getattr(args, "b", None))
    p = getattr(args, "p", None)
    q = getattr(args, "q", None)
    if p is not None and p != len(upper):
        raise UsageError(f"--p {p} but {len(upper)} value(s) in --a")
    if q is not None and q != len(lower):
        raise UsageError(f"--q {q} but {len(lower)} value(s) in --b")
    try:
        return ParamSet(_rational(args.alpha), upper, lower, args.n if n is None else n)
    except InvalidInput as exc:
        raise UsageError(str(exc)) from None


# subcommands ----------------------------------------------------------


def cmd_jack(args) -> int:
    lam = parse_partition(args.lam)
    alpha = _rational(args.alpha)
    form = JackForm(args.form)
    if args.action == "expand":
        f = jack(lam, args.n, alpha, form)
        name = {"J": "J", "Jstar": "J*", "Omega": "Omega", "C": "C"}[form.value]
        _emit(args, {"partition": list(lam), "form": form.value, "poly": poly_json(f)},
              f"{name}_{_ptext(lam)} = {poly_text(f)}")
    else:
        h = hooks(lam, alpha)
        vals = {
            "c": h.c,
            "cprime": h.cprime,
            "j": h.j,
            "J(1_n)": jack_eval_ones(lam, args.n, alpha),
            "form_norm": form_norm(lam, form, args.n, alpha),
        }
        _emit(args, {k: format_rational(v) for k, v in vals.items()},
              "\n".join(f"{k} = {format_rational(v)}" for k, v in vals.items()))
    return EXIT_OK


def cmd_binom(args) -> int:
    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    alpha = _rational(args.alpha)
    value = binom_general(lam, mu, alpha)
    payload = {"lambda": list(lam), "mu": list(mu), "binom": format_rational(value)}
    text = f"binom({_ptext(lam)}, {_ptext(mu)}) = {format_rational(value)}"
    if args.n is not None and covers(lam, mu):
        closed = binom_down_formula(lam, mu, alpha, args.n)
        payload["closed_form"] = format_rational(closed)
        text += f"\nclosed form (n={args.n}) = {format_rational(closed)}"
        if closed != value:
            _emit(args, payload, text)
            return EXIT_FAIL
    _emit(args, payload, text)
    return EXIT_OK


def cmd_op(args) -> int:
    params = _params(args)
    expr = parse_op(args.op, params)
    form = JackForm(args.form)
    if args.to_jack is not None:
        lam = parse_partition(args.to_jack)
        f = jack(lam, params.n, params.alpha, form)
        source = f"{form.value}_{_ptext(lam)}"
    elif args.to_m is not None:
        lam = parse_partition(args.to_m)
        f = SymPoly(params.n, {lam: 1})
        source = f"m_{_ptext(lam)}"
    else:
        raise UsageError("give --to-jack or --to-m")
    img = expr.apply(f, params.alpha)
    payload = {"operator": str(expr), "input": source, "image_m": poly_json(img)}
    text = f"{expr} ({source}) = {poly_text(img)}"
    try:
        coeffs = to_jack_expansion(img, params.alpha, form)
    except (AssertionError, DegenerateParameter, InvalidInput):
        coeffs = None
    if coeffs is not None:
        payload["image_jack"] = {"form": form.value, "terms": expansion_json(coeffs)}
        text += f"\n  in the {form.value} basis: " + (" + ".join(
            f"({format_rational(c)})*{form.value}_{_ptext(k)}" for k, c in sorted(
                coeffs.items(), key=lambda kv: (-sum(kv[0]), tuple(-p for p in kv[0])))
        ) or "0")
    _emit(args, payload, text)
    return EXIT_OK


def cmd_series(args) -> int:
    params = _params(args)
    alphabets = 2 if args.two_alphabet else 1
    s = build_pFq(params, args.maxdeg, alphabets)
    payload = {"series": s.to_json()}
    lines = [f"C_{_ptext(lam)} = {format_rational(c)}" for lam, c in sorted(
        s.coeffs.items(), key=lambda kv: (sum(kv[0]), tuple(-p for p in kv[0])))]
    if args.expand:
        if alphabets == 1:
            f = to_sympoly(s)
            payload["expansion"] = poly_json(f)
            lines.append("expansion: " + poly_text(f))
        else:
            F = diag_to_bipoly(s)
            payload["expansion"] = [
                {"x": list(mu), "y": list(nu), "coef": format_rational(c)}
                for (mu, nu), c in sorted(F.items(), key=lambda kv: (sum(kv[0][0]), sum(kv[0][1]), kv[0]))
            ]
            lines.append(f"expansion: {len(F)} bi-monomial terms")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _solve(theorem: str, params: ParamSet, maxdeg: int):
    from . import solver

    if theorem == "A" or theorem == "Aprime":
        return solver.solve_theorem_A(params, maxdeg), build_pFq(params, maxdeg, 2)
    if theorem == "B":
        return solver.solve_theorem_B(params, maxdeg), build_pFq(params, maxdeg)
    if theorem == "C":
        return solver.solve_theorem_C(params, maxdeg), build_pFq(params, maxdeg)
    a, b = params.upper
    (c,) = params.lower
    built = build_2F1hat(a, b, c, params.n, params.alpha, maxdeg)
    return solver.solve_appendix(theorem, a, b, c, params.n, params.alpha, maxdeg), built


def _check_hat(theorem, params):
    if theorem in ("Bhat", "Chat") and (params.p, params.q) != (2, 1):
        raise UsageError(f"theorem {theorem} needs --a a,b and --b c")


def cmd_solve(args) -> int:
    params = _params(args)
    _check_hat(args.theorem, params)
    got, want = _solve(args.theorem, params, args.maxdeg)
    ok = dict(got.coeffs) == dict(want.coeffs)
    lines = [f"C_{_ptext(lam)} = {format_rational(c)}" for lam, c in sorted(
        got.coeffs.items(), key=lambda kv: (sum(kv[0]), tuple(-p for p in kv[0])))]
    lines.append(f"matches defining coefficients: {ok}")
    _emit(args, {"coeffs": expansion_json(got.coeffs), "matches_oracle": ok}, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def _verify_once(theorem: str, params: ParamSet, maxdeg: int) -> list:
    from . import solver

    _check_hat(theorem, params)
    got, want = _solve(theorem, params, maxdeg)
    residuals = []
    if theorem in ("A", "Aprime"):
        residuals.append(solver.residual_theorem_A(want, theorem))
    elif theorem == "C":
        residuals += [solver.residual_theorem_C(want), solver.residual_theorem_C(want, "transport")]
    elif theorem == "Chat":
        residuals += [solver.residual_appendix("Chat", want), solver.residual_appendix("Chat", want, mode="transport")]
    else:
        for m in range(1, params.n + 1):
            residuals.append(solver.residual_theorem_B(want, m))
    return [dict(got.coeffs) == dict(want.coeffs), residuals]


def cmd_verify(args) -> int:
    if args.alpha is not None:
        runs = [_params(args)]
    else:
        rng = case_rng(args.seed, f"verify/{args.theorem}/p{args.p}q{args.q}/n{args.n}/d{args.maxdeg}")
        runs = None
    draws = []
    all_ok = True
    i = 0
    redraws = 0
    while (runs is not None and i < len(runs)) or (runs is None and len(draws) < args.draws):
        params = runs[i] if runs is not None else draw_params(rng, args.p or 0, args.q or 0, args.n)
        i += 1
        try:
            oracle_ok, residuals = _verify_once(args.theorem, params, args.maxdeg)
        except DegenerateParameter:
            if runs is not None:
                raise
            redraws += 1
            if redraws > 25:
                raise
            continue
        ok = oracle_ok and all(r.is_zero() for r in residuals)
        all_ok &= ok
        draws.append({
            "alpha": format_rational(params.alpha),
            "a": [format_rational(x) for x in params.upper],
            "b": [format_rational(x) for x in params.lower],
            "solver_matches_oracle": oracle_ok,
            "residuals": [r.to_json() for r in residuals],
            "passed": ok,
        })
    text = [f"theorem {args.theorem}: {'verified' if all_ok else 'FAILED'} ({len(draws)} draw(s))"]
    for d in draws:
        worst = max((Fraction(r["max_residual"]) for r in d["residuals"]), default=Fraction(0))
        text.append(f"  alpha={d['alpha']} a={d['a']} b={d['b']}: oracle={d['solver_matches_oracle']} "
                    f"max residual={format_rational(worst)}")
    _emit(args, {"passed": all_ok, "redraws": redraws, "draws": draws}, "\n".join(text))
    return EXIT_OK if all_ok else EXIT_FAIL


def cmd_suite(args) -> int:
    criteria = None
    if args.criteria:
        try:
            criteria = [int(c) for c in args.criteria.split(",")]
        except ValueError:
            raise UsageError(f"malformed criteria list: {args.criteria!r}") from None
        if any(c not in range(1, 10) for c in criteria):
            raise UsageError("criteria are numbered 1..9")
    report = run_suite(args.level, args.seed, criteria, args.fault)
    report["config"] = _config(args)
    if args.format == "json":
        data = report_json(report)
    else:
        lines = [f"{'PASS' if c['passed'] else 'FAIL'}  [{c['criterion']}] {c['key']}  {c['detail']}" for c in report["checks"]]
        lines.append(f"{report['total'] - report['failures']}/{report['total']} checks passed")
        if report["first_failure"]:
            lines.append("first failure: " + json.dumps(report["first_failure"], sort_keys=True))
        data = "\n".join(lines)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(data + "\n")
    else:
        print(data)
    return EXIT_OK if report["failures"] == 0 else EXIT_FAIL


# parser ---------------------------------------------------------------


def _common(p):
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", default=None, help="write the report here instead of stdout")


def _param_flags(p, alpha_default="1"):
    p.add_argument("--alpha", default=alpha_default)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--a", default="", help="comma-separated upper parameters")
    p.add_argument("--b", default="", help="comma-separated lower parameters")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jackpfq", description="Jack polynomials and hypergeometric series, exactly.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("jack", help="Jack polynomials and their norms")
    p.add_argument("action", choices=("expand", "norms"))
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--alpha", default="1")
    p.add_argument("--form", choices=[f.value for f in JackForm], default="J")
    _common(p)
    p.set_defaults(func=cmd_jack)

    p = sub.add_parser("binom", help="generalized binomial coefficient")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--alpha", default="1")
    p.add_argument("--n", type=int, default=None, help="also evaluate the closed form for adjacent pairs")
    _common(p)
    p.set_defaults(func=cmd_binom)

    p = sub.add_parser("op", help="apply an operator expression")
    p.add_argument("action", choices=("apply",))
    p.add_argument("--op", required=True, help='e.g. "ad(-box,E1)^2" or "[box,e1]" or "L - R"')
    p.add_argument("--to-jack", dest="to_jack", default=None)
    p.add_argument("--to-m", dest="to_m", default=None)
    p.add_argument("--form", choices=[f.value for f in JackForm], default="J")
    _param_flags(p)
    _common(p)
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("series", help="build a truncated pFq series")
    p.add_argument("action", choices=("build",))
    _param_flags(p)
    p.add_argument("--maxdeg", type=int, default=4)
    p.add_argument("--two-alphabet", dest="two_alphabet", action="store_true")
    p.add_argument("--expand", action="store_true")
    _common(p)
    p.set_defaults(func=cmd_series)

    theorems = ("A", "Aprime", "B", "C", "Bhat", "Chat")
    p = sub.add_parser("solve", help="reconstruct coefficients from an equation")
    p.add_argument("--theorem", choices=theorems, required=True)
    _param_flags(p)
    p.add_argument("--maxdeg", type=int, default=4)
    _common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="residual and oracle checks at random or given parameters")
    p.add_argument("--theorem", choices=theorems, required=True)
    p.add_argument("--alpha", default=None, help="fix parameters instead of drawing them")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--a", default="")
    p.add_argument("--b", default="")
    p.add_argument("--maxdeg", type=int, default=4)
    p.add_argument("--draws", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("suite", help="run the verification matrix")
    p.add_argument("level", choices=("smoke", "full"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--criteria", default=None, help="comma-separated subset of 1..9")
    p.add_argument("--fault", choices=("binom",), default=None, help="inject a known fault")
    _common(p)
    p.set_defaults(func=cmd_suite)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "n", None) is not None and args.n < 1:
            raise UsageError("--n must be positive")
        if getattr(args, "maxdeg", 0) < 0:
            raise UsageError("--maxdeg must be nonnegative")
        if args.command == "verify" and args.alpha is None and (args.a or args.b):
            raise UsageError("--a/--b need --alpha; omit all three to draw parameters")
        if args.command == "verify" and args.theorem in ("Bhat", "Chat") and args.alpha is None:
            args.p, args.q = 2, 1
        return args.func(args)
    except UsageError as exc:
        print(f"jackpfq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationFailure as exc:
        print(f"jackpfq: verification failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (InvalidInput, DegenerateParameter) as exc:
        print(f"jackpfq: parameter error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except JackError as exc:  # pragma: no cover - defensive
        print(f"jackpfq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

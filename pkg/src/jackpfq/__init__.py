"""Exact computations with Jack polynomials and Jack hypergeometric series.

The package is organized bottom-up:

``scalar``      exact rationals, Pochhammer symbols, truncated power series
``partitions``  partitions, orders, hooks, alpha-Pochhammer symbols
``sympoly``     symmetric polynomials in the monomial basis
``operators``   differential operators (E_r, box, e_1, commutators, L, R)
``jack``        Jack polynomials, normalizations, binomial coefficients
``eigen``       eigenvalues of the diagonal operators (D_r, G, H, M, N)
``series``      truncated pFq series in one and two alphabets
``solver``      uniqueness solvers and residual checks
``suite``       the verification matrix used by ``jackpfq suite``
"""
from .errors import (
    DegenerateParameter,
    InvalidInput,
    JackError,
    NonInvertible,
    PoleError,
    VerificationFailure,
)
from .jack import (
    JackForm,
    binom_general,
    binom_up,
    convert_form,
    from_jack_expansion,
    jack_J,
    jack_eval_ones,
    j_norm,
    pieri_phi,
    to_jack_expansion,
)
from .partitions import ParamSet, partition, partitions_up_to, reverse_lex_order, rho
from .scalar import UniSeries, format_rational, parse_rational, rat
from .series import DiagSeries, JackSeries, build_2F1hat, build_pFq, diag_to_bipoly, to_sympoly
from .solver import (
    Residual,
    residual_appendix,
    residual_theorem_A,
    residual_theorem_B,
    residual_theorem_C,
    solve_appendix,
    solve_theorem_A,
    solve_theorem_B,
    solve_theorem_C,
    stability_counterexample,
)
from .sympoly import SymPoly, basis_e, basis_h, basis_m, basis_p, schur

__version__ = "0.1.0"

__all__ = [
    "DegenerateParameter",
    "DiagSeries",
    "InvalidInput",
    "JackError",
    "JackForm",
    "JackSeries",
    "NonInvertible",
    "ParamSet",
    "PoleError",
    "Residual",
    "SymPoly",
    "UniSeries",
    "VerificationFailure",
    "basis_e",
    "basis_h",
    "basis_m",
    "basis_p",
    "binom_general",
    "binom_up",
    "build_2F1hat",
    "build_pFq",
    "convert_form",
    "diag_to_bipoly",
    "format_rational",
    "from_jack_expansion",
    "j_norm",
    "jack_J",
    "jack_eval_ones",
    "parse_rational",
    "partition",
    "partitions_up_to",
    "pieri_phi",
    "rat",
    "residual_appendix",
    "residual_theorem_A",
    "residual_theorem_B",
    "residual_theorem_C",
    "reverse_lex_order",
    "rho",
    "schur",
    "solve_appendix",
    "solve_theorem_A",
    "solve_theorem_B",
    "solve_theorem_C",
    "stability_counterexample",
    "to_jack_expansion",
    "to_sympoly",
]

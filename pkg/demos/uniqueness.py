"""
Recovering pFq from its differential equations
==============================================

Each solver starts from C_() = 1 and uses only an operator equation to
determine the remaining coefficients.  The answers are then compared with
the Pochhammer ratios, and the residual of the equation is recomputed on
the expanded polynomial.
"""
from fractions import Fraction

from jackpfq import ParamSet, build_pFq
from jackpfq.solver import (
    residual_theorem_A,
    residual_theorem_B,
    residual_theorem_C,
    solve_theorem_A,
    solve_theorem_B_steps,
    solve_theorem_C,
)

alpha = Fraction(7, 3)
P = ParamSet(alpha, (Fraction(1, 2), Fraction(-4, 5)), (Fraction(2, 3),), 3)

# raising operator: a one-step recursion along covers
C = solve_theorem_C(P, 4)
print("raising:", dict(C.coeffs) == dict(build_pFq(P, 4).coeffs))
print("  residual", residual_theorem_C(C).to_json())

# lowering operator: a reverse-lex elimination, with a 2x2 system
# whenever mu can grow in two new rows
B, steps = solve_theorem_B_steps(P, 3)
for st in steps[:6]:
    print(" ", st.mu, "->", st.unknowns, st.equations, st.determinant)
print("lowering:", dict(B.coeffs) == dict(build_pFq(P, 3).coeffs))
for m in (1, 2, 3):
    print("  m =", m, "zero residual:", residual_theorem_B(B, m).is_zero())

# two alphabets: L in x against R in y
P2 = P.with_n(2)
D = solve_theorem_A(P2, 3)
for variant in ("A", "Aprime"):
    r = residual_theorem_A(D, variant)
    print(variant, "complete slices:", r.complete_keys(), "zero:", r.is_zero())

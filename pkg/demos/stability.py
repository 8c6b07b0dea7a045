"""
Why the lowering equation needs every number of variables
=========================================================

In two variables, G = exp(x1 + x2) (1 + (x1 - x2)^2) solves the same
lowering equation as 0F0 = exp(x1 + x2).  Setting x2 = 0 separates them.
"""
from jackpfq.series import exp_p1
from jackpfq.solver import stability_counterexample

rep = stability_counterexample(6)
print("G =", rep.G.truncate(2), "+ ...")
print("exp(p1) =", exp_p1(2, 2), "+ ...")
print("two variables, zero residual:", rep.passes_m2)
print("one variable, zero residual:", not rep.fails_m1, f"(first bad degree: {rep.first_m1_failure})")
print("G differs from 0F0:", rep.differs_from_0F0)

# with H = 1 the same test recovers 0F0 itself
print(stability_counterexample(6, h=(1,)).to_json()["differs_from_0F0"])

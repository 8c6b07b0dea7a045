"""
Hypergeometric series of matrix argument
========================================

Truncated series sum C_lam alpha^|lam| J*_lam with C_lam = (a)_lam/(b)_lam,
compared with the closed forms they are known to equal.
"""
from fractions import Fraction

from jackpfq import ParamSet, build_pFq, to_sympoly
from jackpfq.scalar import pochhammer
from jackpfq.series import cauchy_product, diag_to_bipoly, exp_p1, is_jack_diagonal, one_f_zero_product

alpha = Fraction(3, 2)

# 0F0 is exp(x_1 + ... + x_n)
F = to_sympoly(build_pFq(ParamSet(alpha, (), (), 3), 6))
print("0F0 == exp(p1):", F == exp_p1(3, 6))

# 1F0(a) is prod (1 - x_i)^(-a), for every alpha
a = Fraction(-2, 5)
F = to_sympoly(build_pFq(ParamSet(alpha, (a,), (), 2), 5))
print("1F0 == product:", F == one_f_zero_product(a, 2, 5))

# with one variable the Jack structure disappears: Gauss's 2F1
a, b, c = Fraction(1, 2), Fraction(1, 3), Fraction(5, 4)
F = to_sympoly(build_pFq(ParamSet(alpha, (a, b), (c,), 1), 4))
for k in range(5):
    gauss = pochhammer(a, k) * pochhammer(b, k) / pochhammer(c, k)
    for j in range(1, k + 1):
        gauss /= j
    print(k, F.coefficient((k,)), gauss)

# the two-alphabet 1F0(n/alpha; x, y) is the Cauchy kernel
n = 2
S = build_pFq(ParamSet(alpha, (n / alpha,), (), n), 3, alphabets=2)
B = diag_to_bipoly(S)
print("Cauchy identity:", B == cauchy_product(alpha, n, 3))
print("diagonal in the Jack basis:", is_jack_diagonal(B, n, alpha))

# a vanishing lower Pochhammer symbol is reported, not divided by
try:
    build_pFq(ParamSet(Fraction(5), (), (Fraction(1, 5),), 2), 3)
except Exception as exc:
    print(type(exc).__name__, exc)

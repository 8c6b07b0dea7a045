"""
Eigenvalues from generating functions
=====================================

The operators paired with L and R act diagonally on Jack polynomials.
Their eigenvalues come out of ratios of Debiard-Sekiguchi eigenvalues
prod (w_i + t), w_i = lam_i - (i-1)/alpha, and agree with sums over the
neighbours of lam weighted by binomial coefficients.
"""
from fractions import Fraction

from jackpfq.eigen import g_bruteforce, g_eigenvalue, g_series, h_bruteforce, h_eigenvalue, sekiguchi_eigenvalue
from jackpfq.partitions import rho

alpha = Fraction(5, 2)
n = 3
mu = (2, 1)

print("D(t) at t = 1/3:", sekiguchi_eigenvalue(mu, Fraction(1, 3), n, alpha))
print("G_n(mu; s) =", g_series(mu, n, alpha, 4))

for r in range(4):
    print(f"g_{r},{n}:", g_eigenvalue(mu, r, n, alpha), g_bruteforce(mu, r, n, alpha))

# H_0 = |lam| and H_1 = 2 rho(lam)
for r in range(4):
    print(f"H_{r}:", h_eigenvalue(mu, r, n, alpha), h_bruteforce(mu, r, alpha))
print("2 rho =", 2 * rho(mu, alpha))

"""
Jack polynomials in a few lines
===============================

Build J_lam in the monomial basis, look at its normalizations, and check
the classical specializations by hand.
"""
from fractions import Fraction

from jackpfq import JackForm, jack_J, jack_eval_ones, j_norm, to_jack_expansion
from jackpfq.jack import jack
from jackpfq.partitions import hooks
from jackpfq.sympoly import hall_inner, mul, schur

alpha = Fraction(2)     # zonal polynomials
n = 3

# J_(2,1) in three variables; the m_(1,1,1) coefficient is always |lam|! = 6
J = jack_J((2, 1), n, alpha)
print("J_(2,1) =", J)

# the leading coefficient is the lower hook product c_lam
print("c_(2,1) =", hooks((2, 1), alpha).c)

# the other forms only rescale J
print("J*_(2,1) =", jack((2, 1), n, alpha, JackForm.Jstar))
print("Omega_(2,1)(1,1,1) =", jack((2, 1), n, alpha, JackForm.Omega).eval_ones())
print("J_(2,1)(1,1,1) =", jack_eval_ones((2, 1), n, alpha))

# orthogonality for the alpha-deformed Hall product; the norm is j_lam
for lam in [(3,), (2, 1), (1, 1, 1)]:
    row = [hall_inner(jack_J(lam, n, alpha), jack_J(mu, n, alpha), alpha) for mu in [(3,), (2, 1), (1, 1, 1)]]
    print(lam, [str(v) for v in row], " j =", j_norm(lam, alpha))

# at alpha = 1 we get Schur polynomials up to the hook product
print(jack_J((2, 1), n, 1) == schur((2, 1), n).scale(hooks((2, 1), 1).c))

# products re-expand in the Jack basis (Pieri rule for e_1)
e1J = mul(jack_J((1,), n, alpha), jack_J((2, 1), n, alpha))
print("e1 * J_(2,1) =", {lam: str(c) for lam, c in to_jack_expansion(e1J, alpha).items()})

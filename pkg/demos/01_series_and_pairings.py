"""Truncated power series over the rationals and the pairing with polynomials.

Run: python3 demos/01_series_and_pairings.py
"""

from fractions import Fraction as F

from umbral_mix import Poly, compose, divide, exp_scaled, functional_apply, operator_apply, shift
from umbral_mix.exact_series import monomial

CAP = 8

# e^t - 1 has zero constant term, so t / (e^t - 1) is solved by stripping one
# power of t from both sides before the triangular solve.
e = exp_scaled(1, CAP)
bern = divide(monomial(1, CAP), e - 1)
print("t/(e^t - 1) =", bern)
print("cap after division:", bern.cap)

# log(1 + u) composed with u = e^t - 1 gives back t.
log1p = sum((monomial(m, CAP) * F((-1) ** (m + 1), m) for m in range(2, CAP + 1)), monomial(1, CAP))
print("log(1 + (e^t - 1)) =", compose(log1p, e - 1))

# The pairing reads n! times the t^n coefficient.
x = Poly.x()
print("<t/(e^t-1) | x^2> =", functional_apply(bern, x**2))

# e^{yt} acts as a shift, and t acts as d/dx.
p = x**3 - 2 * x + F(1, 2)
print("e^{2t} p      =", operator_apply(exp_scaled(2, CAP), p))
print("p(x + 2)      =", shift(p, 2))
print("t p           =", operator_apply(monomial(1, CAP), p))

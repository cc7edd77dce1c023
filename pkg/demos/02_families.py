"""Tabulating the polynomial families and seeing how they reduce to each other.

Run: python3 demos/02_families.py
"""

from fractions import Fraction as F

from umbral_mix import (
    MixedFamilyKey,
    barnes_bernoulli_poly,
    bernoulli_numbers,
    higher_bernoulli_poly,
    mixed_number,
    mixed_poly,
    poly_bernoulli_poly,
    shift,
    stirling2,
)

print("Bernoulli numbers B_0..B_8:", [str(b) for b in bernoulli_numbers(8)])
print("Stirling row S(5, .):", [stirling2(5, m) for m in range(6)])

print("\nMixed polynomials for a = (1, 2), k = -1:")
key = MixedFamilyKey.of([1, 2], -1)
for n in range(5):
    print(f"  n={n}: {mixed_poly(n, key)}")
print("  constant terms:", [str(mixed_number(n, key)) for n in range(6)])

# One Barnes parameter equal to 1 and k = 1: the two factors t/(e^t - 1)
# multiply to order-2 Bernoulli, shifted by 1 from the poly-Bernoulli side.
unit = MixedFamilyKey.of([1], 1)
print("\nReductions for n = 0..6:")
print("  mixed(a=1, k=1) == B^(2)(x+1):",
      all(mixed_poly(n, unit) == shift(higher_bernoulli_poly(n, 2), 1) for n in range(7)))
print("  poly-Bernoulli k=1 == B(x+1):",
      all(poly_bernoulli_poly(n, 1) == shift(higher_bernoulli_poly(n, 1), 1) for n in range(7)))
print("  Barnes a=(1) == B(x):",
      all(barnes_bernoulli_poly(n, [1]) == higher_bernoulli_poly(n, 1) for n in range(7)))

# Non-integer Barnes parameters stay exact.
print("\nBarnes a=(1/2, 3), n=3:", barnes_bernoulli_poly(3, [F(1, 2), 3]))

"""Checking the mixed-type identities exactly and inspecting a failure.

Run: python3 demos/03_verifying_identities.py
"""

from fractions import Fraction as F

from umbral_mix import families as fam
from umbral_mix import identities as ident
from umbral_mix.sweep import Grid, run_suite

key = fam.MixedFamilyKey.of([F(1, 2), 3], -2)

for r in ident.verify_explicit(4, key):
    print(r.theorem_id, "equal" if r.equal else f"differs at {r.first_diff}")

r = ident.verify_falling(5, key)
print("falling-factorial coefficients:", [str(c) for c in r.extras["coefficients"]])
print("same row from the connection matrix:", r.extras["coefficients"] == r.extras["connection_row"])

# A small sweep. The default Grid is the full acceptance grid.
grid = Grid(max_n=4, r_list=(1, 2), k_list=(-1, 2))
reports = run_suite("t3", grid)
print(f"\nrecurrence sweep: {sum(r.equal for r in reports)}/{len(reports)} equal")

# Break one Stirling number and watch the expansion check catch it.
real = fam.stirling2
fam.stirling2 = lambda l, m: real(l, m) + (1 if (l, m) == (4, 2) else 0)
try:
    bad = ident.verify_falling(4, key)
    print("with S(4,2) off by one:", "equal" if bad.equal else f"first difference at {bad.first_diff}")
finally:
    fam.stirling2 = real

"""
Primary associates and real units
=================================

Writing lambda = 1 - z, every element prime to lambda is
a0 + a1*lambda (mod lambda^2). Multiplying by z^k shifts a1 by -k*a0, so
exactly one associate z^k * x has a1 = 0 (it is "primary").

For units the primary associate is always the real one.
"""

import random

from cyclopell import (
    CycInt,
    conjugate,
    is_primary,
    is_real,
    lambda_digits,
    primary_exponent,
    unit_ratio_exponent,
    zeta_power,
)
from cyclopell.suite import unit_battery

p = 11

# An ordinary element: one associate out of p is primary.
x = CycInt(p, [3, 1, 4, 1, 5, 9, 2, 6, 5, 4])
print("x =", x)
print("lambda digits:", lambda_digits(x))
k = primary_exponent(x)
print("primary exponent:", k)
print("which z^j x are primary:", [j for j in range(p) if is_primary(x.shift(j))])

# Random units built from cyclotomic units (1 - z^k)/(1 - z) and powers of z.
rng = random.Random(0)
print()
print(f"{'t':>3} {'c':>3} {'-t/2':>5}  real(z^c u)")
for u, _ in unit_battery(p, 8, rng):
    t = unit_ratio_exponent(u)  # u = z^t * conj(u)
    c = primary_exponent(u)
    print(f"{t:>3} {c:>3} {(-t * pow(2, -1, p)) % p:>5}  {is_real(u.shift(c))}")

# A real unit, z + z^-1, is already primary.
w = zeta_power(p, 1) + zeta_power(p, -1)
print()
print("z + 1/z real:", w == conjugate(w), " primary:", is_primary(w))

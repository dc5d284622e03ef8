"""
Arithmetic in Z[zeta_p]
=======================

Elements of Z[zeta_p] are integer vectors on the basis 1, z, ..., z^(p-2).
Everything is exact; there is no floating point anywhere.
"""

from cyclopell import CycInt, conjugate, cyc_new, galois_apply, norm, zeta_power

p = 7
z = zeta_power(p, 1)

# z^(p-1) is not a basis element: it is rewritten as -(1 + z + ... + z^(p-2))
print("z^6          =", z ** 6)
print("z^7          =", z ** 7)

# (1 - z)(1 + z + z^2) telescopes to 1 - z^3
print("(1-z)(1+z+z^2) =", (1 - z) * cyc_new(p, [1, 1, 1]))

# Galois automorphisms permute the powers of z; complex conjugation is z -> z^-1
x = cyc_new(p, [2, -1, 0, 3])
print("x            =", x)
print("sigma_3(x)   =", galois_apply(x, 3))
print("conj(x)      =", conjugate(x))

# The norm is the product of all p-1 conjugates, always a rational integer.
print("N(1 - z)     =", norm(1 - z))
print("N(x)         =", norm(x))
print("N(2)         =", norm(CycInt.from_int(p, 2)), "= 2^6")

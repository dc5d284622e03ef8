"""
Splitting m_p over Q(sqrt(p*))
==============================

q1(x) = 2 * prod (x - z^k) over the quadratic residues k mod p has
coefficients a + b*sqrt(p*) with integers a, b; collecting them gives
q1 = f + sqrt(p*) g and 4 * (1 + x + ... + x^(p-1)) = f^2 - p* g^2.
"""

from cyclopell import build_q, m_poly, p_star, split_fg, sqrt_p_star

p = 13
theta = sqrt_p_star(p)
print(f"sqrt(p*) for p = {p}: {theta}")
print("its square:", theta * theta)

print()
print("coefficients of q1 in Z[z]:")
for k, c in enumerate(build_q(p, 1)):
    print(f"  x^{k}: {c}")

s = split_fg(p)
print()
print("f =", s.f)
print("g =", s.g)
print("4 m_p == f^2 - p* g^2:", s.f * s.f - s.g * s.g * p_star(p) == m_poly(p) * 4)

print()
for q in (3, 5, 7, 11, 17, 19, 23):
    t = split_fg(q)
    print(f"p={q:>2}  f = {t.f}")
    print(f"       g = {t.g}")

"""Slow, independent reference computations used to freeze expected values.

Nothing here calls the closed forms under test; ring questions are answered
with sympy polynomials modulo the cyclotomic polynomial.
"""

from __future__ import annotations

from math import isqrt

from sympy import Poly, QQ, ZZ, cyclotomic_poly, invert, resultant, symbols

X = symbols("x")


def phi(p: int) -> Poly:
    return Poly(cyclotomic_poly(p, X), X, domain=ZZ)


def as_poly(coeffs) -> Poly:
    return Poly(list(reversed(list(coeffs))) or [0], X, domain=ZZ)


def norm_by_resultant(coeffs, p: int) -> int:
    """N(alpha) = Res(Phi_p, alpha(x)) because Phi_p is monic."""
    a = as_poly(coeffs)
    if a.is_zero:
        return 0
    return int(resultant(phi(p).as_expr(), a.as_expr(), X))


def lambda_divides(coeffs, p: int) -> bool:
    # (1 - zeta) is the unique prime above p and has norm p.
    return norm_by_resultant(coeffs, p) % p == 0


def divide_by_one_minus_x(coeffs, p: int) -> list[int]:
    """(alpha) / (1 - zeta) via the inverse of 1 - x modulo Phi_p over Q."""
    ph = Poly(cyclotomic_poly(p, X), X, domain=QQ)
    inv = invert(Poly(1 - X, X, domain=QQ), ph)
    q = (Poly(list(reversed(list(coeffs))), X, domain=QQ) * inv).rem(ph)
    out = [q.coeff_monomial(X ** k) for k in range(p - 1)]
    if any(c.q != 1 for c in out):
        raise ArithmeticError("quotient is not integral")
    return [int(c) for c in out]


def lambda_digits_by_division(coeffs, p: int) -> tuple[int, int]:
    """(a0, a1) with alpha = a0 + a1*lambda (mod lambda^2), digits in [0, p)."""
    coeffs = list(coeffs)
    a0 = next(r for r in range(p) if lambda_divides([coeffs[0] - r, *coeffs[1:]], p))
    rest = divide_by_one_minus_x([coeffs[0] - a0, *coeffs[1:]], p)
    a1 = next(r for r in range(p) if lambda_divides([rest[0] - r, *rest[1:]], p))
    return a0, a1


def pell_brute_force(d: int, b_max: int) -> tuple[int, int] | None:
    """Smallest b <= b_max with d*b^2 + 1 a perfect square."""
    for b in range(1, b_max + 1):
        n = d * b * b + 1
        a = isqrt(n)
        if a * a == n:
            return a, b
    return None


def expand_power_basis(raw, p: int) -> list[int]:
    """Reduce sum raw[k] x^k modulo Phi_p with sympy; the power-basis coefficients."""
    r = as_poly(raw).rem(phi(p))
    return [int(r.coeff_monomial(X ** k)) for k in range(p - 1)]


def split_numeric(p: int, dps: int = 60) -> tuple[list[int], list[int]]:
    """f, g from floating-point roots of unity, using the principal sqrt(p*).

    Independent of the exact Z[zeta] route: q1 and q-1 are expanded in
    complex arithmetic, then f = (q1 + q-1)/2 and g = (q1 - q-1)/(2 sqrt(p*)).
    """
    import mpmath as mp

    with mp.workdps(dps):
        z = mp.exp(2j * mp.pi / p)
        squares = {(k * k) % p for k in range(1, p)}

        def expand(roots):
            poly = [mp.mpc(2)]
            for k in roots:
                r = z ** k
                nxt = [mp.mpc(0)] * (len(poly) + 1)
                for j, c in enumerate(poly):
                    nxt[j + 1] += c
                    nxt[j] -= c * r
                poly = nxt
            return poly

        q1 = expand(sorted(squares))
        qm1 = expand(sorted(set(range(1, p)) - squares))
        root = mp.sqrt(p) if p % 4 == 1 else 1j * mp.sqrt(p)
        f = [(a + b) / 2 for a, b in zip(q1, qm1)]
        g = [(a - b) / (2 * root) for a, b in zip(q1, qm1)]
        out_f, out_g = [], []
        for vals, out in ((f, out_f), (g, out_g)):
            for v in vals:
                n = int(mp.nint(mp.re(v)))
                if abs(v - n) > mp.mpf(10) ** (-dps // 2):
                    raise ArithmeticError(f"coefficient {v} is not near an integer")
                out.append(n)
    while out_f and out_f[-1] == 0:
        out_f.pop()
    while out_g and out_g[-1] == 0:
        out_g.pop()
    return out_f, out_g

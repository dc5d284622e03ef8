"""Checkable identities behind Kummer's argument for the first case of FLT.

None of these prove anything; they exercise the arithmetic that the
argument relies on (the splitting of x**p + y**p over Z[zeta_p], the
Frobenius congruence mod p, and the norm of zeta**i - zeta**j).
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic_core import CycInt, conjugate, norm, require_odd_prime, zeta_power
from .errors import PreconditionError

__all__ = [
    "FermatTriple",
    "factor_product_check",
    "frobenius_check",
    "norm_gap",
    "fermat_congruence_check",
    "fermat_search",
]


@dataclass(frozen=True)
class FermatTriple:
    x0: int
    y0: int
    z0: int
    p: int


def factor_product_check(x: int, y: int, p: int) -> bool:
    """``prod_{i=0}^{p-1} (x + zeta**i * y) == x**p + y**p``."""
    require_odd_prime(p)
    prod = CycInt.one(p)
    for i in range(p):
        prod = prod * (zeta_power(p, i) * y + x)
    return prod == x ** p + y ** p


def _divisible_by(x: CycInt, m: int) -> bool:
    return all(c % m == 0 for c in x.coeffs)


def frobenius_check(alpha: CycInt) -> bool:
    """``alpha**p == sum(a_i**p) (mod p)`` and ``alpha**p == conj(alpha)**p (mod p)``."""
    p = alpha.p
    ap = alpha ** p
    frob = sum(c ** p for c in alpha.coeffs)
    if not _divisible_by(ap - frob, p):
        return False
    return _divisible_by(ap - conjugate(alpha) ** p, p)


def norm_gap(i: int, j: int, p: int) -> int:
    """Norm of ``zeta**i - zeta**j``; equals p whenever i != j mod p."""
    require_odd_prime(p)
    if (i - j) % p == 0:
        raise PreconditionError(f"zeta^{i} - zeta^{j} is zero in Z[zeta_{p}]")
    return norm(zeta_power(p, i) - zeta_power(p, j))


def fermat_congruence_check(t: FermatTriple) -> bool:
    """From ``x0**p + y0**p == z0**p (mod p)`` deduce ``x0 + y0 == z0 (mod p)``.

    Only the residues matter, so any triple satisfying the hypothesis works;
    there are no genuine solutions to feed it.
    """
    p = require_odd_prime(t.p)
    if (pow(t.x0, p, p) + pow(t.y0, p, p) - pow(t.z0, p, p)) % p:
        raise PreconditionError(f"{t} does not satisfy x0^p + y0^p = z0^p mod p")
    return (t.x0 + t.y0 - t.z0) % p == 0


def fermat_search(p: int, bound: int) -> list[tuple[int, int, int]]:
    """All ``1 <= x <= y < z <= bound`` with ``x**p + y**p == z**p``."""
    powers = {z ** p: z for z in range(1, bound + 1)}
    hits = []
    for x in range(1, bound + 1):
        for y in range(x, bound + 1):
            z = powers.get(x ** p + y ** p)
            if z is not None:
                hits.append((x, y, z))
    return hits

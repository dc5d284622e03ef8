"""Legendre symbols, p* and an explicit square root of p* in Z[zeta_p]."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic_core import CycInt, require_odd_prime
from .errors import InternalError

__all__ = [
    "QuadChar",
    "legendre",
    "quad_char",
    "least_nonresidue",
    "p_star",
    "sqrt_p_star",
]


def legendre(k: int, p: int) -> int:
    """Legendre symbol (k/p) by Euler's criterion."""
    require_odd_prime(p)
    r = pow(k % p, (p - 1) // 2, p)
    if r == p - 1:
        return -1
    return r


@dataclass(frozen=True)
class QuadChar:
    """The quadratic residues and non-residues in 1..p-1."""

    p: int
    residues: frozenset[int]

    @property
    def nonresidues(self) -> frozenset[int]:
        return frozenset(range(1, self.p)) - self.residues


@lru_cache(maxsize=None)
def quad_char(p: int) -> QuadChar:
    require_odd_prime(p)
    return QuadChar(p, frozenset((k * k) % p for k in range(1, (p - 1) // 2 + 1)))


def least_nonresidue(p: int) -> int:
    return min(quad_char(p).nonresidues)


def p_star(p: int) -> int:
    """(-1)**((p-1)/2) * p, the sign-adjusted prime that is 1 mod 4."""
    require_odd_prime(p)
    return p if p % 4 == 1 else -p


@lru_cache(maxsize=None)
def sqrt_p_star(p: int) -> CycInt:
    """The quadratic Gauss sum, whose square is p*.

    This fixes the sign of sqrt(p*) for the whole package: sqrt(5) is
    ``z + z^4 - z^2 - z^3`` with ``z = exp(2*pi*i/5)``.
    """
    require_odd_prime(p)
    theta = CycInt.from_raw(p, [0] + [legendre(k, p) for k in range(1, p)])
    if theta * theta != p_star(p):
        raise InternalError(f"Gauss sum for p={p} does not square to p*")
    return theta

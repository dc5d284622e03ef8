"""Exact arithmetic in the ring of integers Z[zeta_p] of a prime cyclotomic field.

Elements are stored on the power basis ``1, zeta, ..., zeta**(p-2)``; every
element has exactly one coefficient vector there, so equality, hashing and
the lambda-adic digits below are all read straight off the coefficients.

``lambda`` always denotes ``1 - zeta``, the prime of Z[zeta_p] above p.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from functools import lru_cache
from math import gcd
from typing import NamedTuple

from sympy import isprime

from .errors import (
    InternalError,
    InvalidAutomorphismError,
    InvalidModulusError,
    ModulusMismatchError,
    PreconditionError,
)

__all__ = [
    "CycInt",
    "LambdaDigits",
    "cyc_new",
    "zeta_power",
    "galois_apply",
    "conjugate",
    "norm",
    "lambda_digits",
    "lambda_divide",
    "is_prime_to_lambda",
    "is_primary",
    "primary_exponent",
    "is_unit",
    "is_real",
    "unit_ratio_exponent",
    "cyclotomic_unit",
    "require_odd_prime",
]


def require_odd_prime(p: int) -> int:
    if isinstance(p, bool) or not isinstance(p, int):
        raise InvalidModulusError(f"modulus must be an int, got {p!r}")
    if p < 3 or not isprime(p):
        raise InvalidModulusError(f"{p} is not an odd prime")
    return p


def _fold(p: int, full: Sequence[int]) -> tuple[int, ...]:
    """Reduce a vector indexed by exponents mod p to the power basis.

    ``full`` has length p (coefficients of zeta**0 .. zeta**(p-1)); the top
    one is eliminated with zeta**(p-1) = -(1 + zeta + ... + zeta**(p-2)).
    """
    top = full[p - 1]
    if top:
        return tuple(c - top for c in full[: p - 1])
    return tuple(full[: p - 1])


class CycInt:
    """An element of Z[zeta_p], immutable.

    >>> z = zeta_power(5, 1)
    >>> z * zeta_power(5, 4) == 1
    True
    """

    __slots__ = ("_p", "_coeffs", "_hash")

    def __init__(self, p: int, coeffs: Sequence[int]) -> None:
        # Trusted constructor: ``coeffs`` must already be canonical.
        if len(coeffs) != p - 1:
            raise InternalError(f"expected {p - 1} coefficients, got {len(coeffs)}")
        self._p = p
        self._coeffs = tuple(coeffs)
        self._hash: int | None = None

    # -- construction -----------------------------------------------------

    @classmethod
    def from_raw(cls, p: int, raw: Iterable[int]) -> CycInt:
        """Canonical element for ``sum(raw[k] * zeta**k)``; any length is fine."""
        require_odd_prime(p)
        full = [0] * p
        for k, c in enumerate(raw):
            c = int(c)
            if c:
                full[k % p] += c
        return cls(p, _fold(p, full))

    @classmethod
    def from_int(cls, p: int, m: int) -> CycInt:
        return cls(p, (m,) + (0,) * (p - 2))

    @classmethod
    def zero(cls, p: int) -> CycInt:
        return cls(p, (0,) * (p - 1))

    @classmethod
    def one(cls, p: int) -> CycInt:
        return cls.from_int(p, 1)

    # -- accessors --------------------------------------------------------

    @property
    def p(self) -> int:
        return self._p

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    def full_coeffs(self) -> list[int]:
        """Coefficients of zeta**0 .. zeta**(p-1) with the last one zero."""
        return [*self._coeffs, 0]

    def is_rational(self) -> bool:
        return not any(self._coeffs[1:])

    def __int__(self) -> int:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not a rational integer")
        return self._coeffs[0]

    def __bool__(self) -> bool:
        return any(self._coeffs)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycInt):
            return self._p == other._p and self._coeffs == other._coeffs
        if isinstance(other, int) and not isinstance(other, bool):
            return self.is_rational() and self._coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self._coeffs[0])
            else:
                self._hash = hash((self._p, self._coeffs))
        return self._hash

    # -- ring operations --------------------------------------------------

    def _coerce(self, other: object) -> CycInt | None:
        if isinstance(other, CycInt):
            if other._p != self._p:
                raise ModulusMismatchError(
                    f"cannot combine elements of Z[zeta_{self._p}] and Z[zeta_{other._p}]"
                )
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return CycInt.from_int(self._p, other)
        return None

    def __add__(self, other: CycInt | int) -> CycInt:
        y = self._coerce(other)
        if y is None:
            return NotImplemented
        return CycInt(self._p, [a + b for a, b in zip(self._coeffs, y._coeffs)])

    __radd__ = __add__

    def __neg__(self) -> CycInt:
        return CycInt(self._p, [-a for a in self._coeffs])

    def __sub__(self, other: CycInt | int) -> CycInt:
        y = self._coerce(other)
        if y is None:
            return NotImplemented
        return CycInt(self._p, [a - b for a, b in zip(self._coeffs, y._coeffs)])

    def __rsub__(self, other: CycInt | int) -> CycInt:
        y = self._coerce(other)
        if y is None:
            return NotImplemented
        return y - self

    def __mul__(self, other: CycInt | int) -> CycInt:
        if isinstance(other, int) and not isinstance(other, bool):
            return CycInt(self._p, [a * other for a in self._coeffs])
        y = self._coerce(other)
        if y is None:
            return NotImplemented
        p = self._p
        full = [0] * p
        ys = [(j, b) for j, b in enumerate(y._coeffs) if b]
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j, b in ys:
                k = i + j
                if k >= p:
                    k -= p
                full[k] += a * b
        return CycInt(p, _fold(p, full))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> CycInt:
        if n < 0:
            raise ValueError("negative powers are not supported; use unit inverses")
        result = CycInt.one(self._p)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k: int) -> CycInt:
        """Multiply by zeta**k; a cyclic rotation, so much cheaper than ``*``."""
        p = self._p
        k %= p
        if not k:
            return self
        full = self.full_coeffs()
        rotated = full[p - k :] + full[: p - k]
        return CycInt(p, _fold(p, rotated))

    def exact_div_int(self, m: int) -> CycInt:
        """Divide every coefficient by ``m``; raises if any division is inexact."""
        out = []
        for c in self._coeffs:
            q, r = divmod(c, m)
            if r:
                raise InternalError(f"{self!r} is not divisible by {m}")
            out.append(q)
        return CycInt(self._p, out)

    # -- display ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"CycInt({self._p}, {list(self._coeffs)})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            if k == 0:
                mono = str(abs(c))
            else:
                z = "z" if k == 1 else f"z^{k}"
                mono = z if abs(c) == 1 else f"{abs(c)}*{z}"
            terms.append(("-" if c < 0 else "+", mono))
        if not terms:
            return "0"
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, mono in terms[1:]:
            out += f" {sign} {mono}"
        return out


def cyc_new(p: int, raw: Iterable[int]) -> CycInt:
    return CycInt.from_raw(p, raw)


def zeta_power(p: int, k: int) -> CycInt:
    """zeta_p**k for any integer k (negative allowed)."""
    require_odd_prime(p)
    full = [0] * p
    full[k % p] = 1
    return CycInt(p, _fold(p, full))


def galois_apply(x: CycInt, k: int) -> CycInt:
    """Image of ``x`` under the automorphism sending zeta to zeta**k."""
    p = x.p
    if k % p == 0:
        raise InvalidAutomorphismError(f"sigma_{k} is not an automorphism of Q(zeta_{p})")
    full = [0] * p
    for j, c in enumerate(x.coeffs):
        if c:
            full[(j * k) % p] += c
    return CycInt(p, _fold(p, full))


def conjugate(x: CycInt) -> CycInt:
    """Complex conjugate, i.e. zeta -> zeta**-1."""
    return galois_apply(x, x.p - 1)


def norm(x: CycInt) -> int:
    """Product of all p-1 Galois conjugates of ``x``."""
    p = x.p
    prod = x
    for k in range(2, p):
        prod = prod * galois_apply(x, k)
    if not prod.is_rational():
        raise InternalError(f"norm of {x!r} came out irrational: {prod!r}")
    return prod.coeffs[0]


class LambdaDigits(NamedTuple):
    """First two digits of ``x = a0 + a1*lambda (mod lambda**2)``, both in [0, p)."""

    a0: int
    a1: int


def lambda_digits(x: CycInt) -> LambdaDigits:
    # Substitute zeta = 1 - lambda and keep the constant and linear terms.
    p = x.p
    a0 = sum(x.coeffs) % p
    a1 = -sum(k * c for k, c in enumerate(x.coeffs)) % p
    return LambdaDigits(a0, a1)


def lambda_divide(x: CycInt) -> CycInt:
    """Exact quotient ``x / (1 - zeta)``.

    Raises :class:`PreconditionError` when lambda does not divide ``x``.
    """
    p = x.p
    s = sum(x.coeffs)
    if s % p:
        raise PreconditionError(f"{x!r} is not divisible by 1 - zeta")
    # Add t*(1 + zeta + ... + zeta**(p-1)) = 0 so the length-p vector sums to
    # zero; then (1 - zeta) * q = x has the prefix sums of x as a solution.
    t = -s // p
    q = []
    acc = 0
    for c in x.full_coeffs():
        acc += c + t
        q.append(acc)
    return CycInt(p, _fold(p, q))


def is_prime_to_lambda(x: CycInt) -> bool:
    return sum(x.coeffs) % x.p != 0


def _require_prime_to_lambda(x: CycInt) -> LambdaDigits:
    digits = lambda_digits(x)
    if digits.a0 == 0:
        raise PreconditionError(f"{x!r} is divisible by 1 - zeta; primary is undefined")
    return digits


def is_primary(x: CycInt) -> bool:
    """True iff ``x`` is congruent to a rational integer modulo lambda**2."""
    return _require_prime_to_lambda(x).a1 == 0


def primary_exponent(x: CycInt) -> int:
    """The unique ``0 <= k < p`` for which ``zeta**k * x`` is primary."""
    a0, a1 = _require_prime_to_lambda(x)
    # zeta**n * x == a0 + (a1 - n*a0)*lambda (mod lambda**2)
    return a1 * pow(a0, -1, x.p) % x.p


def is_unit(x: CycInt) -> bool:
    if not x:
        return False
    return abs(norm(x)) == 1


def is_real(x: CycInt) -> bool:
    return x == conjugate(x)


def unit_ratio_exponent(u: CycInt) -> int:
    """The ``t`` with ``u == zeta**t * conjugate(u)``."""
    if not is_unit(u):
        raise PreconditionError(f"{u!r} is not a unit")
    ubar = conjugate(u)
    for t in range(u.p):
        if ubar.shift(t) == u:
            return t
    raise InternalError(f"u / conj(u) is not a power of zeta for u = {u!r}")


@lru_cache(maxsize=None)
def cyclotomic_unit(p: int, k: int) -> CycInt:
    """``(1 - zeta**k) / (1 - zeta) = 1 + zeta + ... + zeta**(k-1)``."""
    require_odd_prime(p)
    if not 1 <= k <= p - 1:
        raise PreconditionError(f"k must lie in 1..{p - 1}, got {k}")
    u = CycInt.from_raw(p, [1] * k)
    if gcd(k, p) == 1 and abs(norm(u)) != 1:
        raise InternalError(f"cyclotomic unit {u!r} has norm {norm(u)}")
    return u

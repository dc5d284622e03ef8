"""Split the residue/non-residue halves of m_p over Z[sqrt(p*)].

``q1(x) = 2 * prod_{(k/p) = 1} (x - zeta**k)`` has coefficients in
Z[(1 + sqrt(p*))/2]; writing them as ``f_k + sqrt(p*) * g_k`` gives two
integer polynomials with ``4 * m_p = f**2 - p* * g**2``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic_core import CycInt, galois_apply, require_odd_prime
from .errors import InternalError
from .quadratic_tools import least_nonresidue, p_star, quad_char, sqrt_p_star

__all__ = [
    "IntPoly",
    "GaussianInt",
    "GaussSplit",
    "m_poly",
    "build_q",
    "evaluate_over_ring",
    "split_fg",
    "eval_at_one",
    "eval_at_i",
]


class IntPoly:
    """Dense univariate polynomial over Z; ``coeffs[k]`` multiplies x**k."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._coeffs = tuple(c)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def leading(self) -> int:
        return self._coeffs[-1] if self._coeffs else 0

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, int) and not isinstance(other, bool):
            return self == IntPoly([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly([other])
        n = max(len(self._coeffs), len(other._coeffs))
        return IntPoly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-a for a in self._coeffs)

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        return self + (-other)

    def __rsub__(self, other: int) -> IntPoly:
        return IntPoly([other]) - self

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(a * other for a in self._coeffs)
        if not self._coeffs or not other._coeffs:
            return IntPoly()
        out = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"IntPoly({list(self._coeffs)})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            mag = abs(c)
            body = f"{mag}{mono}" if (mag != 1 or not mono) else mono
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


@dataclass(frozen=True)
class GaussianInt:
    """``re + im*i`` with integer parts."""

    re: int
    im: int

    def __add__(self, other: GaussianInt) -> GaussianInt:
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: GaussianInt) -> GaussianInt:
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __neg__(self) -> GaussianInt:
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, other: GaussianInt | int) -> GaussianInt:
        if isinstance(other, int):
            return GaussianInt(self.re * other, self.im * other)
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conj(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def exact_div(self, other: GaussianInt) -> GaussianInt:
        """Quotient in Z[i]; raises :class:`InternalError` if inexact."""
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian integer")
        num = self * other.conj()
        if num.re % n or num.im % n:
            raise InternalError(f"{self} is not divisible by {other} in Z[i]")
        return GaussianInt(num.re // n, num.im // n)

    def __str__(self) -> str:
        return f"{self.re}{self.im:+}i"


I = GaussianInt(0, 1)


@dataclass(frozen=True)
class GaussSplit:
    """The integer polynomials f, g with ``q1 = f + sqrt(p*) g``."""

    p: int
    p_star: int
    f: IntPoly
    g: IntPoly

    def identity_holds(self) -> bool:
        return self.f * self.f - self.g * self.g * self.p_star == m_poly(self.p) * 4


def m_poly(p: int) -> IntPoly:
    """``1 + x + ... + x**(p-1)``, the minimal polynomial of zeta_p."""
    return IntPoly([1] * p)


@lru_cache(maxsize=None)
def build_q(p: int, sign: int) -> tuple[CycInt, ...]:
    """Coefficients (low degree first) of ``2 * prod (x - zeta**k)``.

    The product runs over residues (sign=+1) or non-residues (sign=-1).
    """
    require_odd_prime(p)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    qc = quad_char(p)
    roots = sorted(qc.residues if sign == 1 else qc.nonresidues)
    poly = [CycInt.from_int(p, 2)]
    zero = CycInt.zero(p)
    for k in roots:
        # multiply by (x - zeta**k)
        nxt = [zero] * (len(poly) + 1)
        for j, c in enumerate(poly):
            nxt[j + 1] = nxt[j + 1] + c
            nxt[j] = nxt[j] - c.shift(k)
        poly = nxt
    return tuple(poly)


def evaluate_over_ring(coeffs: Sequence[CycInt], point: CycInt) -> CycInt:
    """Horner evaluation of a polynomial with Z[zeta] coefficients."""
    acc = CycInt.zero(point.p)
    for c in reversed(coeffs):
        acc = acc * point + c
    return acc


@lru_cache(maxsize=None)
def split_fg(p: int) -> GaussSplit:
    require_odd_prime(p)
    ps = p_star(p)
    theta = sqrt_p_star(p)
    n = least_nonresidue(p)
    f_coeffs = []
    g_coeffs = []
    for c in build_q(p, 1):
        tc = galois_apply(c, n)  # negates sqrt(p*), fixes Q
        two_f = c + tc
        scaled_g = (c - tc) * theta  # 2 * g * p*
        if not (two_f.is_rational() and scaled_g.is_rational()):
            raise InternalError(f"coefficient {c!r} of q1 does not lie in Q(sqrt(p*))")
        fk, rf = divmod(int(two_f), 2)
        gk, rg = divmod(int(scaled_g), 2 * ps)
        if rf or rg:
            raise InternalError(f"coefficient {c!r} of q1 has non-integral f/g parts")
        f_coeffs.append(fk)
        g_coeffs.append(gk)
    split = GaussSplit(p, ps, IntPoly(f_coeffs), IntPoly(g_coeffs))
    if not split.identity_holds():
        raise InternalError(f"4*m_p != f^2 - p* g^2 for p={p}")
    return split


def eval_at_one(q: IntPoly) -> int:
    return sum(q.coeffs)


_I_POWERS = (GaussianInt(1, 0), I, GaussianInt(-1, 0), GaussianInt(0, -1))


def eval_at_i(q: IntPoly) -> GaussianInt:
    re = im = 0
    for k, c in enumerate(q.coeffs):
        ik = _I_POWERS[k % 4]
        re += c * ik.re
        im += c * ik.im
    return GaussianInt(re, im)

"""Pell's equation ``a**2 - d*b**2 = 1``.

Two independent routes:

* :func:`solve_dirichlet` (prime d = p > 3) reads a solution off the values
  of the Gauss-split polynomials f, g at x = 1 (p = 1 mod 4) or x = i
  (p = 3 mod 4).
* :func:`solve_cf` (any squarefree d >= 2) walks the continued fraction of
  sqrt(d) and returns the fundamental solution.

Solutions are sign-normalized to a > 0, b > 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Literal

from sympy import factorint, isprime

from .errors import InternalError, NotInGroupError, PreconditionError, UnsupportedInputError
from .gauss_split import GaussianInt, eval_at_i, eval_at_one, split_fg
from .quadratic_tools import p_star

__all__ = [
    "PellSolution",
    "DirichletTrace",
    "solve_dirichlet",
    "solve_cf",
    "power_solution",
    "classify",
    "is_squarefree",
]

CaseTag = Literal["1mod8", "5mod8", "3mod4"]


@dataclass(frozen=True)
class PellSolution:
    d: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.b < 1 or self.a < 1:
            raise PreconditionError(f"({self.a}, {self.b}) is not a positive solution")
        if self.a * self.a - self.d * self.b * self.b != 1:
            raise InternalError(f"{self.a}^2 - {self.d}*{self.b}^2 != 1")

    def as_tuple(self) -> tuple[int, int]:
        return (self.a, self.b)


@dataclass(frozen=True)
class DirichletTrace:
    """Intermediate quantities of one run of :func:`solve_dirichlet`.

    ``x1 = f(1)``, ``y1 = g(1)``; ``xi1 = x1 / p`` for p = 1 mod 4.  For
    p = 5 mod 8 ``(y2, xi2)`` is the cube of ``(y1, xi1)`` and ``(y3, xi3)``
    its quotient by 8; for p = 1 mod 8 ``(y2, xi2)`` is ``(y1, xi1) / 2``;
    for p = 3 mod 4 ``(y2, xi2)`` come from ``f(i) = y2 (1 + i*)`` and
    ``g(i) = xi2 (1 - i*)``.
    """

    p: int
    case: CaseTag
    f1: int
    g1: int
    x1: int
    y1: int
    xi1: int | None = None
    y2: int | None = None
    xi2: int | None = None
    y3: int | None = None
    xi3: int | None = None
    f_i: GaussianInt | None = None
    g_i: GaussianInt | None = None
    i_star: GaussianInt | None = None

    def four_p_relation_holds(self) -> bool:
        return 4 * self.p == self.x1 ** 2 - p_star(self.p) * self.y1 ** 2

    def xi_relation_holds(self) -> bool:
        if self.xi1 is None:
            raise PreconditionError("xi1 is only defined for p = 1 mod 4")
        sign = 1 if self.p % 4 == 1 else -1
        return self.p * self.xi1 ** 2 - sign * self.y1 ** 2 == 4


def _exact(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise InternalError(f"{what}: {num} is not divisible by {den}")
    return q


def _square_norm_minus_one(p: int, y: int, xi: int) -> tuple[int, int]:
    # (y + xi sqrt p)^2 when y^2 - p xi^2 = -1
    if y * y - p * xi * xi != -1:
        raise InternalError(f"{y}^2 - {p}*{xi}^2 != -1")
    return y * y + p * xi * xi, abs(2 * y * xi)


def solve_dirichlet(p: int) -> tuple[PellSolution, DirichletTrace]:
    """Solve ``a**2 - p*b**2 = 1`` for a prime p > 3 from f(1), g(1) or f(i), g(i)."""
    if isinstance(p, bool) or not isinstance(p, int) or p <= 3 or not isprime(p):
        raise UnsupportedInputError(
            f"the cyclotomic method needs a prime p > 3, got {p!r}; use solve_cf"
        )
    split = split_fg(p)
    f1 = eval_at_one(split.f)
    g1 = eval_at_one(split.g)
    x1, y1 = f1, g1

    if p % 4 == 1:
        xi1 = _exact(x1, p, "f(1) / p")
        if p % 8 == 1:
            y2 = _exact(y1, 2, "y1 / 2")
            xi2 = _exact(xi1, 2, "xi1 / 2")
            a, b = _square_norm_minus_one(p, y2, xi2)
            trace = DirichletTrace(p, "1mod8", f1, g1, x1, y1, xi1=xi1, y2=y2, xi2=xi2)
        else:
            y2 = y1 ** 3 + 3 * p * xi1 ** 2 * y1
            xi2 = p * xi1 ** 3 + 3 * y1 ** 2 * xi1
            y3 = _exact(y2, 8, "y2 / 8")
            xi3 = _exact(xi2, 8, "xi2 / 8")
            a, b = _square_norm_minus_one(p, y3, xi3)
            trace = DirichletTrace(
                p, "5mod8", f1, g1, x1, y1, xi1=xi1, y2=y2, xi2=xi2, y3=y3, xi3=xi3
            )
    else:
        i_star = GaussianInt(0, -1) if p % 8 == 3 else GaussianInt(0, 1)
        one = GaussianInt(1, 0)
        f_i = eval_at_i(split.f)
        g_i = eval_at_i(split.g)
        y2c = f_i.exact_div(one + i_star)
        xi2c = g_i.exact_div(one - i_star)
        if y2c.im or xi2c.im:
            raise InternalError(f"f(i)/(1+i*) or g(i)/(1-i*) is not rational for p={p}")
        y2, xi2 = y2c.re, xi2c.re
        if y2 * y2 - p * xi2 * xi2 not in (2, -2):
            raise InternalError(f"{y2}^2 - {p}*{xi2}^2 is not +-2")
        a = _exact(y2 * y2 + p * xi2 * xi2, 2, "(y2^2 + p xi2^2) / 2")
        b = abs(y2 * xi2)
        trace = DirichletTrace(
            p, "3mod4", f1, g1, x1, y1, y2=y2, xi2=xi2, f_i=f_i, g_i=g_i, i_star=i_star
        )

    if not trace.four_p_relation_holds():
        raise InternalError(f"4p != f(1)^2 - p* g(1)^2 for p={p}")
    if trace.xi1 is not None and not trace.xi_relation_holds():
        raise InternalError(f"p xi1^2 - (-1)^((p-1)/2) y1^2 != 4 for p={p}")
    return PellSolution(p, a, b), trace


def is_squarefree(d: int) -> bool:
    if d < 1:
        return False
    return all(e == 1 for e in factorint(d).values())


def solve_cf(d: int) -> PellSolution:
    """Fundamental solution via the continued fraction of sqrt(d).

    Uses the exact recurrence ``m' = a*q - m``, ``q' = (d - m'^2)/q``,
    ``a' = (a0 + m') // q'`` with convergents ``h/k``; the first convergent
    with ``h^2 - d k^2 = 1`` is the fundamental solution.
    """
    if isinstance(d, bool) or not isinstance(d, int) or d < 2:
        raise PreconditionError(f"d must be an integer >= 2, got {d!r}")
    a0 = isqrt(d)
    if a0 * a0 == d:
        raise PreconditionError(f"{d} is a perfect square; only the trivial solution exists")
    if not is_squarefree(d):
        raise PreconditionError(f"{d} is not squarefree")

    m, q, a = 0, 1, a0
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    while h * h - d * k * k != 1:
        m = a * q - m
        q = (d - m * m) // q
        a = (a0 + m) // q
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    return PellSolution(d, h, k)


def power_solution(s: PellSolution, n: int) -> PellSolution:
    """``(a + b sqrt d)**n`` as a Pell solution."""
    if n < 1:
        raise PreconditionError(f"power must be >= 1, got {n}")
    a, b, d = s.a, s.b, s.d
    ra, rb = 1, 0
    while n:
        if n & 1:
            ra, rb = ra * a + d * rb * b, ra * b + rb * a
        n >>= 1
        if n:
            a, b = a * a + d * b * b, 2 * a * b
    return PellSolution(s.d, ra, rb)


def classify(s: PellSolution, fund: PellSolution) -> int:
    """The n with ``s == power_solution(fund, n)``."""
    if s.d != fund.d:
        raise PreconditionError(f"solutions for different d: {s.d} vs {fund.d}")
    a, b = fund.a, fund.b
    n = 1
    while a <= s.a:
        if (a, b) == (s.a, s.b):
            return n
        a, b = a * fund.a + s.d * b * fund.b, a * fund.b + b * fund.a
        n += 1
    raise NotInGroupError(f"({s.a}, {s.b}) is not a power of ({fund.a}, {fund.b})")

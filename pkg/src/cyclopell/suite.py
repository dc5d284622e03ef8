"""Per-prime invariant checks, shared by ``cyclopell verify`` and the tests."""

from __future__ import annotations

import random
from collections.abc import Callable, Iterator
from dataclasses import dataclass

from sympy import primerange

from .cyclotomic_core import (
    CycInt,
    cyclotomic_unit,
    galois_apply,
    is_primary,
    is_real,
    primary_exponent,
    unit_ratio_exponent,
    zeta_power,
)
from .errors import CyclotomyError
from .gauss_split import build_q, eval_at_one, split_fg
from .pell import classify, solve_cf, solve_dirichlet
from .quadratic_tools import p_star, sqrt_p_star
from .verify_flt import factor_product_check, frobenius_check, norm_gap

__all__ = [
    "CheckResult",
    "unit_battery",
    "primary_real_battery",
    "case2_structure",
    "run_suite",
    "checks_for_prime",
]


@dataclass(frozen=True)
class CheckResult:
    p: int
    name: str
    passed: bool
    detail: str = ""


def _cyclotomic_unit_power(p: int, k: int, e: int) -> CycInt:
    if e >= 0:
        return cyclotomic_unit(p, k) ** e
    # (1 - zeta)/(1 - zeta^k) is sigma_k applied to the unit for k^-1 mod p
    inv = galois_apply(cyclotomic_unit(p, pow(k, -1, p)), k)
    return inv ** (-e)


def unit_battery(
    p: int, count: int, rng: random.Random, max_exp: int = 2, max_factors: int = 3
) -> Iterator[tuple[CycInt, CycInt]]:
    """Yield ``(u, u_inverse)`` for units ``zeta**j * prod cyclotomic_unit(p, k)**e_k``.

    The inverse comes along for free and certifies that ``u`` is a unit
    without computing a norm.
    """
    ks = list(range(2, p - 1))
    for _ in range(count):
        j = rng.randrange(p)
        u = zeta_power(p, j)
        v = zeta_power(p, -j)
        if ks:
            for k in rng.sample(ks, min(len(ks), rng.randint(1, max_factors))):
                e = rng.choice([e for e in range(-max_exp, max_exp + 1) if e])
                u = u * _cyclotomic_unit_power(p, k, e)
                v = v * _cyclotomic_unit_power(p, k, -e)
        yield u, v


def primary_real_battery(p: int, count: int, rng: random.Random) -> str | None:
    """Run the primary/real checks on ``count`` units; return a failure message or None."""
    for u, v in unit_battery(p, count, rng):
        if u * v != 1:
            return f"battery element {u!r} is not a unit"
        c = primary_exponent(u)
        hits = [k for k in range(p) if is_primary(u.shift(k))]
        if hits != [c]:
            return f"primary exponents {hits} != [{c}] for {u!r}"
        w = u.shift(c)
        if not is_real(w):
            return f"zeta^{c} * u is primary but not real for u = {u!r}"
        if primary_exponent(w) != 0:
            return f"real unit {w!r} has non-zero primary exponent"
        t = unit_ratio_exponent(u)
        if (c + t * pow(2, -1, p)) % p:
            return f"primary exponent {c} != -t/2 for t = {t}"
    return None


def case2_structure(p: int) -> str | None:
    """Coefficient symmetries and the +-2 relation for p = 3 mod 4, p > 3."""
    split = split_fg(p)
    f, g = split.f, split.g
    l = (p - 1) // 2
    if f.degree != l or f.leading != 2 or f[0] != -2:
        return f"f has wrong degree/leading/constant: {f}"
    if any(f[l - k] != -f[k] for k in range(l + 1)):
        return "f is not antisymmetric"
    if any(g[l - k] != g[k] for k in range(l + 1)):
        return "g is not symmetric"
    if eval_at_one(f) != 0:
        return "f(1) != 0"
    _, trace = solve_dirichlet(p)
    y2, xi2 = trace.y2, trace.xi2
    if y2 % 2 == 0 or xi2 % 2 == 0:
        return f"y2={y2}, xi2={xi2} not both odd"
    if y2 * y2 - p * xi2 * xi2 not in (2, -2):
        return "y2^2 - p xi2^2 != +-2"
    return None


def _check(p: int, name: str, fn: Callable[[], str | None]) -> CheckResult:
    try:
        msg = fn()
    except CyclotomyError as exc:
        return CheckResult(p, name, False, f"{type(exc).__name__}: {exc}")
    return CheckResult(p, name, msg is None, msg or "")


def checks_for_prime(p: int, seed: int = 0, battery: int = 20) -> list[CheckResult]:
    rng = random.Random(seed * 1_000_003 + p)
    out = []

    def sqrt_identity() -> str | None:
        theta = sqrt_p_star(p)
        return None if theta * theta == p_star(p) else "theta^2 != p*"

    def split_identity() -> str | None:
        s = split_fg(p)
        if not s.identity_holds():
            return "4 m_p != f^2 - p* g^2"
        theta = sqrt_p_star(p)
        q1 = build_q(p, 1)
        for k, c in enumerate(q1):
            if c != theta * s.g[k] + s.f[k]:
                return f"f + theta g differs from q1 at x^{k}"
        return None

    out.append(_check(p, "sqrt_p_star", sqrt_identity))
    out.append(_check(p, "gauss_split", split_identity))

    if p > 3:
        def dirichlet() -> str | None:
            sol, trace = solve_dirichlet(p)
            classify(sol, solve_cf(p))
            if not trace.four_p_relation_holds():
                return "4p != f(1)^2 - p* g(1)^2"
            if trace.xi1 is not None and not trace.xi_relation_holds():
                return "p xi1^2 - (-1)^((p-1)/2) y1^2 != 4"
            return None

        out.append(_check(p, "pell_dirichlet", dirichlet))
        if p % 4 == 3:
            out.append(_check(p, "case2_structure", lambda: case2_structure(p)))

    if p <= 31:
        out.append(_check(p, "primary_real", lambda: primary_real_battery(p, battery, rng)))

    if p <= 13:
        def gaps() -> str | None:
            bad = [(i, j) for i in range(p) for j in range(i + 1, p) if norm_gap(i, j, p) != p]
            return f"norm_gap != p for {bad}" if bad else None

        out.append(_check(p, "norm_gap", gaps))

        def frobenius() -> str | None:
            for _ in range(10):
                alpha = CycInt(p, [rng.randint(-20, 20) for _ in range(p - 1)])
                if not frobenius_check(alpha):
                    return f"Frobenius congruence fails for {alpha!r}"
            return None

        out.append(_check(p, "frobenius", frobenius))

    if p <= 11:
        def products() -> str | None:
            for x in range(-3, 4):
                for y in range(-3, 4):
                    if not factor_product_check(x, y, p):
                        return f"product check fails at x={x}, y={y}"
            return None

        out.append(_check(p, "factor_product", products))
    return out


def run_suite(p_max: int, seed: int = 0, battery: int = 20) -> list[CheckResult]:
    """All checks for odd primes up to ``p_max``, ordered by p."""
    results = []
    for p in primerange(3, p_max + 1):
        results.extend(checks_for_prime(int(p), seed=seed, battery=battery))
    return results

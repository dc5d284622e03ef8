"""Command-line front end: ``cyclopell {pell,decompose,normalize,check-unit,verify}``.

Exit codes: 0 success, 1 a verification failed, 2 bad usage or input.
Every big integer in ``--json`` output is a decimal string.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from typing import Any

from sympy import isprime

from .cyclotomic_core import (
    CycInt,
    is_primary,
    is_prime_to_lambda,
    is_real,
    lambda_digits,
    norm,
    primary_exponent,
    require_odd_prime,
    unit_ratio_exponent,
)
from .errors import CyclotomyError, InternalError, InvalidModulusError, NotInGroupError
from .gauss_split import GaussianInt, m_poly, split_fg
from .pell import DirichletTrace, PellSolution, classify, is_squarefree, solve_cf, solve_dirichlet
from .suite import run_suite

DEFAULT_P_MAX = 499

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _parse_coeffs(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"malformed coefficient list {text!r}; expected e.g. 4,3") from None


def _odd_prime(p: int) -> int:
    try:
        return require_odd_prime(p)
    except InvalidModulusError as exc:
        raise UsageError(str(exc)) from None


def _guard(p: int, allow_large: bool) -> None:
    if p > DEFAULT_P_MAX and not allow_large:
        raise UsageError(f"{p} exceeds {DEFAULT_P_MAX}; pass --allow-large to proceed")


def _emit(args: argparse.Namespace, payload: dict[str, Any], lines: Sequence[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def _gauss_json(z: GaussianInt | None) -> dict[str, str] | None:
    if z is None:
        return None
    return {"re": str(z.re), "im": str(z.im)}


def _trace_json(trace: DirichletTrace) -> dict[str, Any]:
    out: dict[str, Any] = {"case": trace.case}
    for name in ("f1", "g1", "x1", "y1", "xi1", "y2", "xi2", "y3", "xi3"):
        value = getattr(trace, name)
        if value is not None:
            out[name] = str(value)
    for name in ("f_i", "g_i", "i_star"):
        value = getattr(trace, name)
        if value is not None:
            out[name] = _gauss_json(value)
    return out


# -- verbs --------------------------------------------------------------------


def cmd_pell(args: argparse.Namespace) -> int:
    d = args.d
    if d < 2:
        raise UsageError(f"d must be >= 2, got {d}")
    if not is_squarefree(d):
        raise UsageError(f"{d} is not squarefree")
    method = args.method
    if method != "cf" and (d == 3 or not isprime(d)):
        print(
            f"note: the cyclotomic method needs a prime > 3; using continued fractions for d={d}",
            file=sys.stderr,
        )
        method = "cf"
    if method != "cf":
        _guard(d, args.allow_large)

    payload: dict[str, Any] = {"p": d, "method": method}
    lines = [f"d = {d}", f"method: {method}"]
    status = EXIT_OK
    sol: PellSolution
    power: int | None = None

    if method == "cf":
        sol = solve_cf(d)
        power = 1
    else:
        sol, trace = solve_dirichlet(d)
        payload["trace"] = _trace_json(trace)
        lines.append(f"case: {trace.case}")
        lines.append(f"f(1) = {trace.f1}, g(1) = {trace.g1}")
        if method == "both":
            fund = solve_cf(d)
            payload["fundamental"] = {"a": str(fund.a), "b": str(fund.b)}
            lines.append(f"continued fractions: a = {fund.a}, b = {fund.b}")
            try:
                power = classify(sol, fund)
                lines.append(f"methods agree: dirichlet = fundamental^{power}")
            except NotInGroupError as exc:
                lines.append(f"methods DISAGREE: {exc}")
                status = EXIT_FAIL

    payload.update(a=str(sol.a), b=str(sol.b), fundamental_power=power)
    lines.insert(2, f"solution: a = {sol.a}, b = {sol.b}")
    if power is not None:
        lines.append(f"fundamental power: {power}")
    _emit(args, payload, lines)
    return status


def cmd_decompose(args: argparse.Namespace) -> int:
    p = _odd_prime(args.p)
    _guard(p, args.allow_large)
    split = split_fg(p)
    ok = split.identity_holds()
    lhs = m_poly(p) * 4
    payload = {
        "p": p,
        "p_star": str(split.p_star),
        "f": [str(c) for c in split.f.coeffs],
        "g": [str(c) for c in split.g.coeffs],
        "identity": ok,
    }
    lines = [
        f"p = {p}, p* = {split.p_star}",
        f"f = {split.f}",
        f"g = {split.g}",
        f"4*m_p = {lhs}",
        f"4*m_p == f^2 - p* g^2: {'OK' if ok else 'FAILED'}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_normalize(args: argparse.Namespace) -> int:
    p = _odd_prime(args.p)
    x = CycInt.from_raw(p, _parse_coeffs(args.coeffs))
    digits = lambda_digits(x)
    if not is_prime_to_lambda(x):
        raise UsageError(f"{x} is divisible by 1 - zeta; it has no primary associate")
    k = primary_exponent(x)
    y = x.shift(k)
    payload = {
        "p": p,
        "element": [str(c) for c in x.coeffs],
        "lambda_digits": {"a0": str(digits.a0), "a1": str(digits.a1)},
        "primary_exponent": k,
        "normalized": [str(c) for c in y.coeffs],
    }
    lines = [
        f"element: {x}",
        f"lambda digits: a0 = {digits.a0}, a1 = {digits.a1}",
        f"primary exponent: {k}",
        f"normalized (z^{k} * element): {y}",
        f"normalized coefficients: {','.join(map(str, y.coeffs))}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_check_unit(args: argparse.Namespace) -> int:
    p = _odd_prime(args.p)
    x = CycInt.from_raw(p, _parse_coeffs(args.coeffs))
    n = norm(x)
    unit = abs(n) == 1
    real = is_real(x)
    primary = is_primary(x) if is_prime_to_lambda(x) else None
    ratio = unit_ratio_exponent(x) if unit else None

    def show(v: bool | int | None) -> str:
        if v is None:
            return "n/a"
        if isinstance(v, bool):
            return str(v).lower()
        return str(v)

    payload = {
        "p": p,
        "element": [str(c) for c in x.coeffs],
        "norm": str(n),
        "is_unit": unit,
        "is_real": real,
        "is_primary": primary,
        "unit_ratio_exponent": ratio,
    }
    lines = [
        f"element: {x}",
        f"norm: {n}",
        f"unit: {show(unit)}",
        f"real: {show(real)}",
        f"primary: {show(primary)}",
        f"unit ratio exponent: {show(ratio)}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.p_max < 3:
        raise UsageError("p_max must be at least 3")
    results = run_suite(args.p_max, seed=args.seed, battery=args.battery)
    failed = [r for r in results if not r.passed]
    if args.json:
        print(
            json.dumps(
                {
                    "p_max": args.p_max,
                    "passed": not failed,
                    "checks": [
                        {"p": r.p, "name": r.name, "passed": r.passed, "detail": r.detail}
                        for r in results
                    ],
                },
                indent=2,
            )
        )
    else:
        for r in results:
            line = f"p={r.p:<4d} {r.name:<16s} {'PASS' if r.passed else 'FAIL'}"
            if r.detail:
                line += f"  {r.detail}"
            print(line)
        print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclopell",
        description="Exact arithmetic in Z[zeta_p], primary units and cyclotomic Pell solutions.",
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    pell = sub.add_parser("pell", help="solve x^2 - d y^2 = 1")
    pell.add_argument("d", type=int, help="squarefree d >= 2 (prime > 3 for the cyclotomic method)")
    pell.add_argument("--method", choices=("dirichlet", "cf", "both"), default="both")
    pell.add_argument("--json", action="store_true")
    pell.add_argument("--allow-large", action="store_true")
    pell.set_defaults(func=cmd_pell)

    dec = sub.add_parser("decompose", help="print f, g with 4 m_p = f^2 - p* g^2")
    dec.add_argument("p", type=int)
    dec.add_argument("--json", action="store_true")
    dec.add_argument("--allow-large", action="store_true")
    dec.set_defaults(func=cmd_decompose)

    for verb, func, help_text in (
        ("normalize", cmd_normalize, "lambda-digits and primary associate of an element"),
        ("check-unit", cmd_check_unit, "unit / real / primary tests for an element"),
    ):
        sp = sub.add_parser(verb, help=help_text)
        sp.add_argument("p", type=int)
        sp.add_argument("coeffs", help="comma-separated coefficients of 1, z, z^2, ...")
        sp.add_argument("--json", action="store_true")
        sp.set_defaults(func=func)

    ver = sub.add_parser("verify", help="run the invariant suite for all odd primes <= p_max")
    ver.add_argument("p_max", type=int)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--battery", type=int, default=20, help="units per prime in the primary/real check")
    ver.add_argument("--json", action="store_true")
    ver.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except CyclotomyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

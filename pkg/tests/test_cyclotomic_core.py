import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclopell import (
    CycInt,
    conjugate,
    cyc_new,
    cyclotomic_unit,
    galois_apply,
    is_primary,
    is_prime_to_lambda,
    is_real,
    is_unit,
    lambda_digits,
    lambda_divide,
    norm,
    primary_exponent,
    unit_ratio_exponent,
    zeta_power,
)
from cyclopell.errors import (
    InvalidAutomorphismError,
    InvalidModulusError,
    ModulusMismatchError,
    PreconditionError,
)
from cyclopell.suite import unit_battery

from oracles import expand_power_basis, lambda_digits_by_division, norm_by_resultant

SMALL_PRIMES = [3, 5, 7, 11]


@st.composite
def elements(draw, p=None, bound=30):
    if p is None:
        p = draw(st.sampled_from(SMALL_PRIMES))
    coeffs = draw(st.lists(st.integers(-bound, bound), min_size=p - 1, max_size=p - 1))
    return CycInt(p, coeffs)


@st.composite
def triples(draw):
    p = draw(st.sampled_from(SMALL_PRIMES))
    return tuple(draw(elements(p=p)) for _ in range(3))


def z(p, k=1):
    return zeta_power(p, k)


# -- construction -------------------------------------------------------------


@pytest.mark.parametrize(
    "p, raw, expected",
    [
        (3, [0, 0, 1], [-1, -1]),
        (5, [7], [7, 0, 0, 0]),
        (5, [0, 0, 0, 0, 0, 0, 1], [0, 1, 0, 0]),
        (5, [0, 0, 0, 0, 0, 1], [1, 0, 0, 0]),
    ],
)
def test_cyc_new_examples(p, raw, expected):
    assert cyc_new(p, raw).coeffs == tuple(expected)


@pytest.mark.parametrize("p", [1, 2, 4, 9, 15, -3])
def test_cyc_new_rejects_bad_modulus(p):
    with pytest.raises(InvalidModulusError):
        cyc_new(p, [1])


@given(st.sampled_from(SMALL_PRIMES), st.lists(st.integers(-50, 50), max_size=30))
def test_cyc_new_matches_sympy_reduction(p, raw):
    assert list(cyc_new(p, raw).coeffs) == expand_power_basis(raw, p)


@given(elements())
def test_cyc_new_idempotent(x):
    assert cyc_new(x.p, x.coeffs) == x
    assert cyc_new(x.p, x.full_coeffs()) == x


# -- ring operations ----------------------------------------------------------


def test_add_examples():
    x = CycInt(5, [3, -1, 4, 1])
    assert CycInt.zero(5) + x == x
    assert (z(5) + z(5, 4)).coeffs == (-1, 0, -1, -1)
    assert x + (-x) == 0


def test_mul_examples():
    p = 7
    geometric = cyc_new(p, [1, 1, 1])
    assert (1 - z(p)) * geometric == 1 - z(p, 3)
    assert z(p, p - 1) * z(p) == 1
    assert ((1 + z(5)) * (1 + z(5, 4))).coeffs == (1, 0, -1, -1)


def test_modulus_mismatch():
    with pytest.raises(ModulusMismatchError):
        z(5) + z(7)
    with pytest.raises(ModulusMismatchError):
        z(5) * z(7)


@given(triples())
def test_ring_axioms(t):
    a, b, c = t
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - b == a + (-b)


@given(elements(), st.integers(-20, 20))
def test_shift_is_multiplication_by_zeta_power(x, k):
    assert x.shift(k) == x * z(x.p, k)


@given(elements(bound=5), st.integers(0, 6))
def test_pow_matches_repeated_multiplication(x, n):
    expected = CycInt.one(x.p)
    for _ in range(n):
        expected = expected * x
    assert x ** n == expected


def test_int_interop_and_hash():
    assert CycInt.from_int(5, 3) == 3
    assert 3 == CycInt.from_int(5, 3)
    assert hash(CycInt.from_int(5, 3)) == hash(3)
    assert z(5) != 1
    assert {z(5), z(5, 6)} == {z(5)}


def test_str():
    assert str(CycInt(5, [1, 0, -2, 1])) == "1 - 2*z^2 + z^3"
    assert str(CycInt.zero(3)) == "0"


# -- Galois action and norm ---------------------------------------------------


def test_galois_examples():
    assert galois_apply(z(7), 3) == z(7, 3)
    x = CycInt(7, [1, 2, 3, 4, 5, 6])
    assert galois_apply(x, 1) == x
    assert conjugate(conjugate(x)) == x
    with pytest.raises(InvalidAutomorphismError):
        galois_apply(x, 14)


@given(elements(), st.integers(1, 50), st.integers(1, 50))
def test_galois_composition(x, j, k):
    p = x.p
    if j % p == 0 or k % p == 0:
        return
    assert galois_apply(galois_apply(x, k), j) == galois_apply(x, j * k)


@given(elements())
def test_galois_is_ring_homomorphism(x):
    y = x + z(x.p)
    for k in range(1, x.p):
        assert galois_apply(x * y, k) == galois_apply(x, k) * galois_apply(y, k)


def test_norm_examples():
    assert norm(1 - z(5)) == 5
    for j in range(5):
        assert norm(z(5, j)) == 1
    assert norm(CycInt.from_int(5, 2)) == 16


@settings(max_examples=60)
@given(elements(bound=10))
def test_norm_matches_resultant(x):
    assert norm(x) == norm_by_resultant(x.coeffs, x.p)


@settings(max_examples=40)
@given(triples())
def test_norm_multiplicative_and_galois_invariant(t):
    x, y, _ = t
    assert norm(x * y) == norm(x) * norm(y)
    for k in range(2, x.p):
        assert norm(galois_apply(x, k)) == norm(x)


# -- lambda-adic digits -------------------------------------------------------


def test_lambda_digit_examples():
    assert lambda_digits(CycInt.from_int(5, 12)) == (2, 0)
    assert lambda_digits(z(5)) == (1, 4)
    assert lambda_digits(CycInt(3, [4, 3])) == (1, 0)


@settings(max_examples=40)
@given(elements(bound=12))
def test_lambda_digits_match_explicit_division(x):
    assert tuple(lambda_digits(x)) == lambda_digits_by_division(x.coeffs, x.p)


@given(elements())
def test_lambda_divide_roundtrip(x):
    y = x * (1 - z(x.p))
    assert lambda_divide(y) == x


@given(elements())
def test_lambda_divides_difference_with_conjugate(x):
    q = lambda_divide(x - conjugate(x))
    assert q * (1 - z(x.p)) == x - conjugate(x)


def test_lambda_divide_rejects():
    with pytest.raises(PreconditionError):
        lambda_divide(CycInt.from_int(5, 1))


def test_prime_to_lambda():
    assert not is_prime_to_lambda(1 - z(5))
    assert is_prime_to_lambda(CycInt.from_int(5, 7))
    assert not is_prime_to_lambda(CycInt.from_int(5, 5))


# -- primary elements ---------------------------------------------------------


def test_primary_examples():
    assert is_primary(CycInt(3, [4, 3]))
    assert is_primary(CycInt(3, [-4, -3]))
    assert not is_primary(z(5))
    for m in (1, 2, 6, -13):
        assert is_primary(CycInt.from_int(5, m))
    with pytest.raises(PreconditionError):
        is_primary(1 - z(5))


def test_primary_exponent_examples():
    assert primary_exponent(z(5)) == 4
    assert primary_exponent(CycInt(3, [4, 3])) == 0
    # brute force over k with explicit lambda-division found k = 3
    assert primary_exponent(z(5, 2) * 7) == 3
    with pytest.raises(PreconditionError):
        primary_exponent(CycInt.from_int(7, 14))


@given(elements())
def test_primary_exponent_unique(x):
    if not is_prime_to_lambda(x):
        return
    hits = [k for k in range(x.p) if is_primary(x.shift(k))]
    assert hits == [primary_exponent(x)]


# -- units --------------------------------------------------------------------


def test_unit_and_real_examples():
    for j in range(1, 5):
        assert is_unit(z(5, j))
        assert not is_real(z(5, j))
    w = z(5) + z(5, 4)
    assert is_unit(w) and is_real(w)
    assert not is_unit(CycInt.from_int(5, 2))
    assert not is_unit(CycInt.zero(5))


def test_unit_ratio_examples():
    p = 7
    for k in range(p):
        assert unit_ratio_exponent(z(p, k)) == (2 * k) % p
    assert unit_ratio_exponent(z(5) + z(5, 4)) == 0
    assert unit_ratio_exponent(1 + z(5)) == 1
    with pytest.raises(PreconditionError):
        unit_ratio_exponent(CycInt.from_int(5, 2))


def test_cyclotomic_unit_examples():
    assert cyclotomic_unit(5, 1) == 1
    u = cyclotomic_unit(5, 2)
    assert u == 1 + z(5)
    assert norm(u) == 1
    for p in (5, 7, 11):
        for k in range(1, p):
            assert (1 - z(p)) * cyclotomic_unit(p, k) == 1 - z(p, k)
    with pytest.raises(PreconditionError):
        cyclotomic_unit(5, 5)
    with pytest.raises(PreconditionError):
        cyclotomic_unit(5, 0)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_primary_iff_real_on_units(p):
    rng = random.Random(p)
    for u, v in unit_battery(p, 30, rng):
        assert u * v == 1
        assert abs(norm_by_resultant(u.coeffs, p)) == 1
        c = primary_exponent(u)
        t = unit_ratio_exponent(u)
        assert u == conjugate(u).shift(t)
        # the primary associate is zeta^(-t/2) u, which is real
        assert c == (-t * pow(2, -1, p)) % p
        assert is_real(u.shift(c))
        assert is_real(u) == (c == 0)

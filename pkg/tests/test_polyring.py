import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polycert.polyring import (
    Polynomial,
    PolynomialSyntaxError,
    divide_by_simplex_form_minus_one,
    evaluate,
    format_poly,
    graded_parts,
    homogenize_pad,
    is_nonneg_coeffs,
    parse,
    parse_many,
)

from helpers import from_sympy, random_poly, random_simplex_point, to_sympy

NV = 3
exps = st.tuples(*[st.integers(0, 3)] * NV)
coefs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.dictionaries(exps, coefs, max_size=5).map(lambda d: Polynomial(NV, d))


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert p + q == q + p
    assert p - p == Polynomial.zero(NV)


@settings(max_examples=40, deadline=None)
@given(polys, polys)
def test_mul_matches_sympy(p, q):
    assert p * q == from_sympy(to_sympy(p) * to_sympy(q), NV)


@pytest.mark.parametrize("k", range(9))
def test_pow_is_repeated_mul(k):
    rng = random.Random(k)
    for _ in range(5):
        p = random_poly(rng, 2, 3, 4)
        acc = Polynomial.constant(2, 1)
        for _ in range(k):
            acc = acc * p
        assert p**k == acc


def test_homogenize_pad_example():
    assert homogenize_pad(parse("1 + x1", 2), 2) == parse("2*x1^2 + 3*x1*x2 + x2^2")


def test_homogenize_pad_agrees_on_simplex():
    rng = random.Random(1)
    for _ in range(50):
        n = rng.randint(1, 3)
        p = random_poly(rng, n, 4, 5)
        d = max(p.degree(), 0) + rng.randint(0, 2) if not p.is_zero() else 0
        h = homogenize_pad(p, d)
        assert h.is_zero() or (h.is_homogeneous() and h.degree() == d)
        x = random_simplex_point(rng, n)
        assert evaluate(h, x) == evaluate(p, x)


def test_homogenize_pad_rejects_low_degree():
    with pytest.raises(ValueError):
        homogenize_pad(parse("x1^3 + 1"), 2)


def test_evaluate_is_multiplicative():
    rng = random.Random(2)
    for _ in range(50):
        p, q = random_poly(rng, 3, 3, 4), random_poly(rng, 3, 3, 4)
        x = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3)]
        assert evaluate(p * q, x) == evaluate(p, x) * evaluate(q, x)


def test_graded_parts_sum_back():
    p = parse("3 - x1 + x1*x2 + x2^3")
    parts = graded_parts(p)
    assert [d for d, _ in parts] == [0, 1, 2, 3]
    assert sum((h for _, h in parts), Polynomial.zero(2)) == p


def test_is_nonneg_coeffs_witness():
    assert is_nonneg_coeffs(parse("x1^2 + x2^2")) == (True, None)
    ok, w = is_nonneg_coeffs(parse("x1^2 - x1*x2 + x2^2"))
    assert not ok and w == (1, 1)


def test_division_by_simplex_form():
    rng = random.Random(3)
    for _ in range(30):
        p = random_poly(rng, 3, 4, 5)
        q, r = divide_by_simplex_form_minus_one(p)
        assert p == q * (Polynomial.simplex_form(3) - 1) + r
        assert all(e[-1] == 0 for e in r.terms)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("x1^2 - x1*x2 + x2^2", "x1^2 - x1*x2 + x2^2"),
        ("x2^2 + x1 x2 - 1/2", "x1*x2 + x2^2 - 1/2"),
        ("0", "0"),
        ("-3/6*x1", "-1/2*x1"),
        ("x1 - x1", "0"),
        ("2 x1^3 x2 + x3", "2*x1^3*x2 + x3"),
    ],
)
def test_parse_print(text, expected):
    assert format_poly(parse(text)) == expected


def test_round_trip_random():
    rng = random.Random(4)
    for _ in range(100):
        p = random_poly(rng, 3, 4, 6)
        p = p * Fraction(rng.randint(1, 7), rng.randint(1, 7))
        assert parse(format_poly(p), 3) == p


@pytest.mark.parametrize("bad", ["x1^^2", "x0", "x1 +", "1/0", "y", "", "x1^-1"])
def test_parse_errors(bad):
    with pytest.raises(PolynomialSyntaxError):
        parse(bad)


def test_parse_many_shares_nvars():
    a, b = parse_many(["x1", "x3"])
    assert a.nvars == b.nvars == 3
    with pytest.raises(PolynomialSyntaxError):
        parse("x3", 2)


def test_grlex_printing_order():
    assert format_poly(parse("1 + x2 + x1 + x1^2")) == "x1^2 + x1 + x2 + 1"

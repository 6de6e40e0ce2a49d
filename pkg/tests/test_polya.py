import random
from fractions import Fraction

import pytest
import sympy

from polycert.polya import (
    coefficient_identity_check,
    f_epsilon,
    falling_factorial,
    polya_exponent,
    simplex_positive,
    verify_polya,
    verify_witnesses,
)
from polycert.polyring import Polynomial, is_nonneg_coeffs, parse

from helpers import from_sympy, random_poly, symbols, to_sympy


def test_polya_example():
    f = parse("x1^2 - x1*x2 + x2^2")
    res = polya_exponent(f)
    assert res.found and res.k == 1
    assert res.product == parse("x1^3 + x2^3")
    assert res.witnesses == [(0, (1, 1))]
    assert verify_polya(f, res.k, res.product)
    assert verify_witnesses(f, res.witnesses)


def test_polya_trivial_and_exhausted():
    assert polya_exponent(parse("x1 + x2")).k == 0
    f = parse("x1^2 - 2*x1*x2 + x2^2")
    res = polya_exponent(f, 10)
    assert not res.found
    assert [k for k, _ in res.witnesses] == list(range(11))
    assert verify_witnesses(f, res.witnesses)


def test_polya_errors():
    with pytest.raises(ValueError):
        polya_exponent(parse("x1 + 1"))
    with pytest.raises(ValueError):
        polya_exponent(Polynomial.zero(2))


def test_polya_against_sympy():
    # homogeneous forms positive on the simplex: a nonnegative form plus a small perturbation
    rng = random.Random(30)
    x1, x2, x3 = symbols(3)
    s = x1 + x2 + x3
    for _ in range(10):
        base = (x1 + x2 + x3) ** 2 * rng.randint(2, 4)
        e = rng.choice([x1 * x2, x2 * x3, x1 * x3])
        expr = sympy.expand(base - e * rng.randint(1, 5))
        f = from_sympy(expr, 3)
        res = polya_exponent(f, 60)
        assert res.found
        k = res.k
        assert from_sympy(s**k * expr, 3) == res.product
        if k:
            prev = sympy.Poly(sympy.expand(s ** (k - 1) * expr), x1, x2, x3)
            assert min(prev.coeffs()) < 0
        # monotonicity: one more factor keeps the coefficients nonnegative
        assert is_nonneg_coeffs(res.product * Polynomial.simplex_form(3))[0]


def test_falling_factorial_examples():
    assert falling_factorial(Fraction(3, 2), 0, 4) == Fraction(3, 2) ** 4
    assert falling_factorial(1, Fraction(1, 3), 2) == Fraction(2, 3)
    assert falling_factorial(7, 5, 0) == 1


def test_f_epsilon_examples():
    f = parse("x1^2 - x1*x2 + x2^2")
    assert f_epsilon(f, Fraction(1, 3)) == parse("x1^2 + x2^2 - x1*x2 - 1/3*x1 - 1/3*x2")
    assert f_epsilon(f, 0) == f
    assert f_epsilon(parse("x1*x2"), 1) == parse("x1*x2")


def test_coefficient_identity_examples():
    assert coefficient_identity_check(parse("x1^2 - x1*x2 + x2^2"), 1)
    assert coefficient_identity_check(parse("x1 + x2"), 0)


def test_coefficient_identity_hand_value():
    f = parse("x1^2 - x1*x2 + x2^2")
    fe = f_epsilon(f, Fraction(1, 3))
    assert Fraction(3, 2) * fe((1, 0)) == 1 == (Polynomial.simplex_form(2) * f).coeff((3, 0))


def test_coefficient_identity_random():
    rng = random.Random(31)
    for _ in range(20):
        f = random_poly(rng, rng.randint(1, 3), rng.randint(1, 4), 4, homogeneous=True)
        if f.is_zero():
            continue
        for k in range(5):
            assert coefficient_identity_check(f, k)


def test_coefficient_identity_detects_corruption():
    # sanity check that the identity is not vacuous: perturb one side
    f = parse("x1^2 - x1*x2 + x2^2")
    g = parse("x1^2 - x1*x2 + 2*x2^2")
    fe = f_epsilon(g, Fraction(1, 3))
    lhs = (Polynomial.simplex_form(2) * f).coeff((0, 3))
    assert lhs != Fraction(3, 2) * fe((0, 1))


def test_simplex_positive_examples():
    assert simplex_positive(parse("x1^3 + x2^3")) == 0
    assert simplex_positive(parse("x1^2 - x1*x2 + x2^2")) == 1
    assert simplex_positive(parse("x1*x2 - x1^2"), 5) is None
    with pytest.raises(ValueError):
        simplex_positive(parse("x1 - 1"))

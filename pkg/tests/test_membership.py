import time
from fractions import Fraction

import pytest
import sympy

from polycert.membership import (
    InfeasibleAtDegree,
    MembershipWitness,
    SemiringPresentation,
    member_at_degree,
    product_of,
    products_up_to_degree,
    verify_refutation,
    verify_witness,
)
from polycert.polyring import Polynomial, evaluate, homogenize_pad, parse, parse_many
from polycert.simplexcert import SimplexCertificate, certify_positive_simplex

GENS = parse_many(["1 + x1", "1 - x1", "x1^2 + x1^4"])
T = SemiringPresentation(GENS)


@pytest.mark.parametrize("D", [2, 4, 6, 8, 10, 12])
def test_square_is_not_reached(D):
    out = member_at_degree(parse("x1^2"), T, D)
    assert isinstance(out, InfeasibleAtDegree)
    assert verify_refutation(parse("x1^2"), T, out)
    assert out.degree == D


def test_evaluation_argument():
    # In a witness x^2 = sum c_j * prod_j, evaluating at 0 kills every product
    # containing x^2 + x^4 and sends every other product to 1, so those
    # coefficients vanish. Every remaining product is divisible by x^2 + x^4,
    # and x^2 is not: the degree-2 polynomial cannot be a multiple of a quartic.
    for md, p in products_up_to_degree(T, 12):
        assert evaluate(p, [0]) == (0 if md[2] else 1)
    x = sympy.symbols("x")
    _, rem = sympy.div(x**2, x**2 + x**4, x)
    assert rem == x**2


def test_square_plus_one():
    target = parse("1 + x1^2")
    out = member_at_degree(target, T, 2)
    assert isinstance(out, MembershipWitness)
    assert verify_witness(target, T, out)
    # the textbook witness is also valid
    half = Fraction(1, 2)
    assert verify_witness(target, T, MembershipWitness(2, ((half, (2, 0, 0)), (half, (0, 2, 0)))))


def test_generator_itself():
    out = member_at_degree(parse("x1^2 + x1^4"), T, 4)
    assert isinstance(out, MembershipWitness) and out.terms == ((Fraction(1), (0, 0, 1)),)


def test_monotone_in_degree():
    target = parse("1 + x1^2")
    w = member_at_degree(target, T, 2)
    for D in (3, 4, 6):
        assert isinstance(member_at_degree(target, T, D), MembershipWitness)
        assert verify_witness(target, T, MembershipWitness(D, w.terms))


def test_products_enumeration():
    prods = products_up_to_degree(T, 4)
    mds = [md for md, _ in prods]
    assert mds == sorted(mds)
    assert all(p == product_of(GENS, md) for md, p in prods)
    assert all(sum(e * g.degree() for e, g in zip(md, GENS)) <= 4 for md in mds)
    assert len(mds) == len({p for _, p in prods})
    with pytest.raises(ValueError):
        products_up_to_degree(SemiringPresentation([parse("2", 1)]), 2)


def test_refutation_tampering():
    out = member_at_degree(parse("x1^2"), T, 4)
    flipped = InfeasibleAtDegree(4, {m: -v for m, v in out.functional.items()})
    assert not verify_refutation(parse("x1^2"), T, flipped)
    assert not verify_witness(parse("x1^2"), T, MembershipWitness(2, ((Fraction(1), (2, 0, 0)),)))
    assert not verify_witness(parse("1 + x1^2"), T, MembershipWitness(2, ((Fraction(-1), (0, 0, 0)), (Fraction(2), (0, 0, 0)))))


def test_presentation_validation():
    with pytest.raises(ValueError):
        SemiringPresentation([])
    with pytest.raises(ValueError):
        SemiringPresentation([parse("x1"), parse("x2")])
    with pytest.raises(ValueError):
        member_at_degree(parse("x1 + x2"), T, 2)


def test_agrees_with_simplex_certificates():
    # P has nonnegative coefficients, so it is a nonnegative combination of monomials in x1, x2
    xs = SemiringPresentation(parse_many(["x1", "x2"]))
    for text in ["x1^2 - x1*x2 + x2^2", "3*x1^2 - 2*x1*x2 + x2^2", "x1^3 - x1^2*x2 + x1*x2^2"]:
        f = parse(text, 2)
        cert = certify_positive_simplex(f)
        assert isinstance(cert, SimplexCertificate)
        out = member_at_degree(cert.P, xs, cert.P.degree())
        assert isinstance(out, MembershipWitness)
        assert cert.P == homogenize_pad(f, f.degree()) * Polynomial.simplex_form(2) ** cert.k


def test_budget():
    t = time.perf_counter()
    for D in (2, 4, 6, 8, 10, 12):
        member_at_degree(parse("x1^2"), T, D)
    assert time.perf_counter() - t < 10

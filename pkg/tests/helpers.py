"""Random generators and a sympy bridge shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction

import sympy

from polycert.polyring import Polynomial


def random_poly(rng: random.Random, nvars: int, max_deg: int, nterms: int, lo: int = -5, hi: int = 5,
                homogeneous: bool = False, nonneg: bool = False) -> Polynomial:
    terms: dict[tuple[int, ...], Fraction] = {}
    for _ in range(nterms):
        if homogeneous:
            cuts = sorted(rng.randint(0, max_deg) for _ in range(nvars - 1))
            parts = [b - a for a, b in zip([0] + cuts, cuts + [max_deg])]
            e = tuple(parts)
        else:
            e = tuple(rng.randint(0, max_deg) for _ in range(nvars))
            while sum(e) > max_deg:
                i = rng.randrange(nvars)
                if e[i]:
                    e = e[:i] + (e[i] - 1,) + e[i + 1:]
        c = rng.randint(0 if nonneg else lo, hi)
        terms[e] = terms.get(e, Fraction(0)) + c
    return Polynomial(nvars, terms)


def random_simplex_point(rng: random.Random, nvars: int, interior: bool = False) -> list[Fraction]:
    raw = [Fraction(rng.randint(1 if interior else 0, 20)) for _ in range(nvars)]
    if sum(raw) == 0:
        raw[0] = Fraction(1)
    s = sum(raw)
    return [r / s for r in raw]


def symbols(nvars: int):
    return sympy.symbols(f"x1:{nvars + 1}")


def to_sympy(p: Polynomial):
    xs = symbols(p.nvars)
    expr = sympy.Integer(0)
    for e, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for x, k in zip(xs, e):
            term *= x**k
        expr += term
    return expr


def from_sympy(expr, nvars: int) -> Polynomial:
    xs = symbols(nvars)
    sp = sympy.Poly(sympy.expand(expr), *xs)
    return Polynomial(nvars, {tuple(m): Fraction(int(c.p), int(c.q)) for m, c in sp.terms()})

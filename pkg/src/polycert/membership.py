"""Degree-bounded membership in a finitely generated semiring.

The semiring generated by nonnegative scalars and polynomials ``g_1..g_m``
consists of nonnegative combinations of products ``prod g_i^e_i``. Fixing a
degree bound ``D`` turns membership of a target into an LP feasibility
problem with one equation per monomial. Infeasibility at ``D`` is backed by a
Farkas functional: a linear form on coefficients that is nonnegative on
every product of degree at most ``D`` and equal to ``-1`` on the target.
Such a refutation says nothing about larger ``D``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import Sequence

from .lp import Constraint, LinearProgram, solve
from .polyring import Exponent, Polynomial


@dataclass(frozen=True)
class SemiringPresentation:
    generators: tuple[Polynomial, ...]
    include_nonneg_scalars: bool = True

    def __init__(self, generators: Sequence[Polynomial], include_nonneg_scalars: bool = True):
        gens = tuple(generators)
        if not gens:
            raise ValueError("need at least one generator")
        if len({g.nvars for g in gens}) != 1:
            raise ValueError("generators must share nvars")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "include_nonneg_scalars", include_nonneg_scalars)

    @property
    def nvars(self) -> int:
        return self.generators[0].nvars


@dataclass(frozen=True)
class MembershipWitness:
    """``target == sum(c * prod(g_i ** e_i))`` with every ``c >= 0``."""

    degree: int
    terms: tuple[tuple[Fraction, tuple[int, ...]], ...]


@dataclass(frozen=True)
class InfeasibleAtDegree:
    """No representation using products of degree ``<= degree``.

    ``functional`` maps monomials to rationals; it is nonnegative on every
    such product and ``-1`` on the target.
    """

    degree: int
    functional: dict[Exponent, Fraction]


def product_of(gens: Sequence[Polynomial], multidegree: Sequence[int]) -> Polynomial:
    out = Polynomial.constant(gens[0].nvars, 1)
    for g, e in zip(gens, multidegree):
        if e:
            out = out * g**e
    return out


def products_up_to_degree(T: SemiringPresentation, D: int) -> list[tuple[tuple[int, ...], Polynomial]]:
    """Products of generators of total degree ``<= D``, in lexicographic multidegree order.

    Products equal as polynomials are kept once, under their first multidegree.
    """
    if D < 0:
        raise ValueError("D must be nonnegative")
    degs = []
    for g in T.generators:
        if g.is_zero() or g.is_constant():
            raise ValueError(f"generator {g} is constant; scalars are covered by the coefficients")
        degs.append(g.degree())
    ranges = [range(D // d + 1) for d in degs]
    seen: set[Polynomial] = set()
    out = []
    # products of generator powers are computed incrementally from cached powers
    cache: dict[tuple[int, int], Polynomial] = {}

    def gpow(i: int, e: int) -> Polynomial:
        if (i, e) not in cache:
            cache[(i, e)] = T.generators[i] ** e
        return cache[(i, e)]

    for md in cartesian(*ranges):
        if sum(e * d for e, d in zip(md, degs)) > D:
            continue
        p = Polynomial.constant(T.nvars, 1)
        for i, e in enumerate(md):
            if e:
                p = p * gpow(i, e)
        if p in seen:
            continue
        seen.add(p)
        out.append((tuple(md), p))
    return out


def member_at_degree(
    target: Polynomial, T: SemiringPresentation, D: int
) -> MembershipWitness | InfeasibleAtDegree:
    if target.nvars != T.nvars:
        raise ValueError("dimension mismatch")
    prods = products_up_to_degree(T, D)
    monos = set(target.support())
    for _, p in prods:
        monos |= p.support()
    monos = sorted(monos)
    cols = [p for _, p in prods]
    cons = [Constraint([p.coeff(m) for p in cols], "==", target.coeff(m)) for m in monos]
    res = solve(LinearProgram([0] * len(cols), cons))
    if res.optimal:
        x = res.point
        terms = tuple((c, md) for c, (md, _) in zip(x, prods) if c)
        witness = MembershipWitness(D, terms)
        if not verify_witness(target, T, witness):
            raise AssertionError("LP witness does not re-expand to the target")
        return witness

    # the phase-1 dual is a Farkas vector: y.A_j >= 0 on every product, y.b < 0
    y = res.farkas
    scale = -1 / sum((v * target.coeff(m) for m, v in zip(monos, y)), Fraction(0))
    out = InfeasibleAtDegree(D, {m: v * scale for m, v in zip(monos, y) if v})
    if not verify_refutation(target, T, out):
        raise AssertionError("Farkas functional failed its own check")
    return out


def verify_witness(target: Polynomial, T: SemiringPresentation, w: MembershipWitness) -> bool:
    total = Polynomial.zero(T.nvars)
    for c, md in w.terms:
        if c < 0:
            return False
        total = total + product_of(T.generators, md) * c
    return total == target


def _apply(functional: dict[Exponent, Fraction], p: Polynomial) -> Fraction:
    return sum((v * p.coeff(m) for m, v in functional.items()), Fraction(0))


def verify_refutation(target: Polynomial, T: SemiringPresentation, r: InfeasibleAtDegree) -> bool:
    """Check the Farkas functional against every product of degree ``<= r.degree``."""
    if _apply(r.functional, target) >= 0:
        return False
    return all(_apply(r.functional, p) >= 0 for _, p in products_up_to_degree(T, r.degree))

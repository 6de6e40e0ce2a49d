"""Monomial valuations, initial parts and the associated place.

For a weight ``w`` the valuation of a nonzero polynomial is
``v_w(p) = -max <w, alpha>`` over its support; ``in_w(p)`` keeps the terms
attaining that maximum. Weights are rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .polyring import Polynomial, is_nonneg_coeffs
from .support import FaceData, newton_faces

WeightVector = tuple[Fraction, ...]


def weight(*entries) -> WeightVector:
    if len(entries) == 1 and isinstance(entries[0], (list, tuple)):
        entries = entries[0]
    return tuple(Fraction(e) for e in entries)


def _score(w: Sequence[Fraction], e) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(w, e)), Fraction(0))


def _check_dim(p: Polynomial, w) -> None:
    if len(w) != p.nvars:
        raise ValueError(f"weight has {len(w)} entries, polynomial has {p.nvars} variables")


def valuation(p: Polynomial, w: Sequence) -> Fraction | float:
    """``v_w(p)``; ``math.inf`` for the zero polynomial."""
    _check_dim(p, w)
    if p.is_zero():
        return math.inf
    return -max(_score(w, e) for e in p.support())


def initial_part(p: Polynomial, w: Sequence) -> Polynomial:
    _check_dim(p, w)
    if p.is_zero():
        return p
    top = -valuation(p, w)
    return Polynomial(p.nvars, {e: c for e, c in p.terms.items() if _score(w, e) == top})


@dataclass(frozen=True)
class RationalFunction:
    """A quotient ``num / den`` of polynomials, compared by cross-multiplication."""

    num: Polynomial
    den: Polynomial

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("denominator is the zero polynomial")
        if self.num.nvars != self.den.nvars:
            raise ValueError("dimension mismatch")

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RationalFunction is not hashable (no canonical form)")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"


def place(a: RationalFunction, w: Sequence) -> RationalFunction | None:
    """The place attached to ``v_w``.

    Returns zero if ``v_w(num) > v_w(den)``, ``in_w(num) / in_w(den)`` when the
    valuations agree, and ``None`` when ``a`` lies outside the valuation ring.
    """
    vn = valuation(a.num, w)
    vd = valuation(a.den, w)
    if vn > vd:
        return RationalFunction(Polynomial.zero(a.num.nvars), Polynomial.constant(a.num.nvars, 1))
    if vn == vd:
        return RationalFunction(initial_part(a.num, w), initial_part(a.den, w))
    return None


def proper_initial_parts(p: Polynomial) -> list[tuple[FaceData, Polynomial]]:
    """Initial parts ``in_w(p) != p``, one per proper face of the Newton polytope."""
    return [(face, initial_part(p, face.normal)) for face in newton_faces(p)]


def check_addass(p: Polynomial) -> tuple[bool, FaceData | None]:
    """Whether every proper initial part has nonnegative coefficients.

    Returns ``(True, None)`` or ``(False, first failing face)``.
    """
    for face, part in proper_initial_parts(p):
        ok, _ = is_nonneg_coeffs(part)
        if not ok:
            return False, face
    return True, None


@dataclass(frozen=True)
class LimitTable:
    """``p(s^-w1 x1, ..., s^-wn xn) * s^-v_w(p)`` grouped by powers of ``s``.

    With ``s = exp(-t)`` every component of positive ``s``-degree vanishes as
    ``t`` grows, so the degree-0 component is the limit ``in_w(p)(x)``.
    """

    components: tuple[tuple[int, Fraction], ...]
    samples: tuple[tuple[Fraction, Fraction, Fraction], ...] = ()

    @property
    def lowest(self) -> tuple[int, Fraction]:
        return self.components[0]


def limit_check(p: Polynomial, w: Sequence, x: Sequence, s_grid: Sequence = ()) -> LimitTable:
    """Exact substitution form of the limit characterization of ``in_w``.

    ``w`` must be integral and ``x`` positive. Each component value is the sum
    of ``c_alpha * x^alpha`` over terms of equal ``s``-degree. For every
    positive rational ``s`` in ``s_grid`` a sample row
    ``(s, direct substitution, sum of components * s^degree)`` is recorded;
    the two values agree exactly.
    """
    if p.is_zero():
        raise ValueError("limit_check needs a nonzero polynomial")
    _check_dim(p, w)
    w = [Fraction(a) for a in w]
    if any(a.denominator != 1 for a in w):
        raise ValueError("limit_check requires integer weights")
    x = [Fraction(v) for v in x]
    if len(x) != p.nvars or any(v <= 0 for v in x):
        raise ValueError("x must be a positive point of the right dimension")
    top = -valuation(p, w)
    comps: dict[int, Fraction] = {}
    for e, c in p.terms.items():
        deg = int(top - _score(w, e))
        val = c
        for xi, a in zip(x, e):
            val *= xi**a
        comps[deg] = comps.get(deg, Fraction(0)) + val
    samples = []
    for s in s_grid:
        s = Fraction(s)
        if s <= 0:
            raise ValueError("grid values must be positive")
        direct = Fraction(0)
        for e, c in p.terms.items():
            val = c
            for xi, wi, a in zip(x, w, e):
                val *= (xi * s ** int(-wi)) ** a
            direct += val
        direct *= s ** int(top)
        graded = sum((v * s**d for d, v in comps.items()), Fraction(0))
        samples.append((s, direct, graded))
    return LimitTable(tuple(sorted(comps.items())), tuple(samples))

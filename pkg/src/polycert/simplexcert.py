"""Certificates of nonnegative-coefficient representatives modulo ``x1+...+xn-1``.

Given ``f = sum g_i h_i`` with every ``h_i`` coefficient-nonnegative, the
engine looks for ``f = P + Q (x1+...+xn-1)`` with ``P`` coefficient-nonnegative:

1. shift ``g_i`` by ``c (x1+...+xn-1)^2`` (congruent to zero, so the sum
   stays congruent to ``f``);
2. homogenize each ``g_i`` and ``h_i`` by padding with powers of
   ``x1+...+xn`` so that all products share one degree;
3. run the Polya search on the resulting homogeneous polynomial ``F``;
4. ``P = (x1+...+xn)^k F`` and ``Q = (f - P) / (x1+...+xn-1)`` exactly.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from .polya import polya_exponent
from .polyring import (
    Polynomial,
    divide_by_simplex_form_minus_one,
    homogenize_pad,
    is_nonneg_coeffs,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdentityData:
    """Pairs ``(g, h)`` with ``h`` nonzero and coefficient-nonnegative."""

    pairs: tuple[tuple[Polynomial, Polynomial], ...]

    def __init__(self, pairs: Sequence[tuple[Polynomial, Polynomial]]):
        pairs = tuple((g, h) for g, h in pairs)
        if not pairs:
            raise ValueError("an identity needs at least one pair")
        n = pairs[0][0].nvars
        for g, h in pairs:
            if g.nvars != n or h.nvars != n:
                raise ValueError("all polynomials in an identity must share nvars")
            if h.is_zero() or not is_nonneg_coeffs(h)[0]:
                raise ValueError(f"h = {h} must be nonzero with nonnegative coefficients")
        object.__setattr__(self, "pairs", pairs)

    @property
    def nvars(self) -> int:
        return self.pairs[0][0].nvars

    def total(self) -> Polynomial:
        out = Polynomial.zero(self.nvars)
        for g, h in self.pairs:
            out = out + g * h
        return out


@dataclass(frozen=True)
class SimplexCertificate:
    """``f == P + Q * (x1+...+xn-1)`` with ``P`` coefficient-nonnegative."""

    P: Polynomial
    Q: Polynomial
    k: int
    shift: int


@dataclass
class CertificationExhausted:
    max_shift: int
    max_k: int
    shifts_tried: list[int] = field(default_factory=list)


def simplex_ideal_generator(nvars: int) -> Polynomial:
    return Polynomial.simplex_form(nvars) - 1


def verify_identity(f: Polynomial, identity: IdentityData) -> bool:
    if f.nvars != identity.nvars:
        raise ValueError("dimension mismatch")
    return identity.total() == f


def shift_schedule(max_shift: int) -> list[int]:
    """``0, 1, 2, 4, 8, ...`` up to ``max_shift``."""
    out = [0]
    c = 1
    while c <= max_shift:
        out.append(c)
        c *= 2
    return out


def homogenized_sum(pairs: Sequence[tuple[Polynomial, Polynomial]]) -> Polynomial:
    """Pad every ``g_i``, ``h_i`` to a common product degree and sum the products."""
    live = [(g, h) for g, h in pairs if not g.is_zero()]
    if not live:
        return Polynomial.zero(pairs[0][0].nvars)
    d = max(g.degree() + h.degree() for g, h in live)
    out = Polynomial.zero(live[0][0].nvars)
    for g, h in live:
        dg = g.degree()
        out = out + homogenize_pad(g, dg) * homogenize_pad(h, d - dg)
    return out


def certify_simplex(
    f: Polynomial, identity: IdentityData, max_shift: int = 64, max_k: int = 200
) -> SimplexCertificate | CertificationExhausted:
    """Search for a simplex certificate of ``f`` driven by ``identity``.

    Success for some finite shift and exponent is guaranteed when every
    ``g_i`` is positive on the zeros of ``f`` in the simplex and ``f >= 0``
    there; otherwise the search ends with :class:`CertificationExhausted`.
    """
    if not verify_identity(f, identity):
        raise ValueError("identity does not reproduce f")
    n = f.nvars
    ell = simplex_ideal_generator(n)
    sq = ell * ell
    tried = []
    for c in shift_schedule(max_shift):
        tried.append(c)
        shifted = [(g + sq * c, h) for g, h in identity.pairs]
        f_shift = IdentityData(shifted).total()
        _, rem = divide_by_simplex_form_minus_one(f_shift - f)
        if not rem.is_zero():
            raise AssertionError("shifted identity is not congruent to f")
        F = homogenized_sum(shifted)
        if F.is_zero():
            k, P = 0, F
        else:
            res = polya_exponent(F, max_k)
            log.debug("shift %d: polya %s", c, "found k=%s" % res.k if res.found else "exhausted")
            if not res.found:
                continue
            k, P = res.k, res.product
        Q, rem = divide_by_simplex_form_minus_one(f - P)
        if not rem.is_zero():
            raise AssertionError(f"f - P is not divisible by x1+...+xn-1 (remainder {rem})")
        return SimplexCertificate(P, Q, k, c)
    return CertificationExhausted(max_shift, max_k, tried)


def certify_positive_simplex(
    f: Polynomial, max_shift: int = 64, max_k: int = 200
) -> SimplexCertificate | CertificationExhausted:
    """Certificate search using the trivial identity ``f = f * 1``."""
    return certify_simplex(f, IdentityData([(f, Polynomial.constant(f.nvars, 1))]), max_shift, max_k)


def verify_certificate(f: Polynomial, cert: SimplexCertificate) -> bool:
    """Exact re-check: ``P`` nonnegative and ``(f - P) / (x1+...+xn-1) == Q`` with no remainder."""
    if cert.P.nvars != f.nvars or cert.Q.nvars != f.nvars:
        return False
    if not is_nonneg_coeffs(cert.P)[0]:
        return False
    q, rem = divide_by_simplex_form_minus_one(f - cert.P)
    return rem.is_zero() and q == cert.Q

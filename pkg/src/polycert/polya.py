"""Polya's refinement as a certificate search.

For homogeneous ``f`` positive on the standard simplex, ``(x1+...+xn)^k f``
has only nonnegative coefficients once ``k`` is large. No effective bound on
``k`` is known here, so :func:`polya_exponent` searches ``k = 0, 1, 2, ...``
under a budget, one multiplication per step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .polyring import Exponent, Polynomial, evaluate, is_nonneg_coeffs


@dataclass
class PolyaResult:
    """Outcome of :func:`polya_exponent`.

    When ``found``, ``k`` is minimal and ``product == (x1+...+xn)^k * f``.
    Otherwise ``witnesses`` holds, for every ``k <= max_k``, an exponent with
    a negative coefficient in the corresponding product.
    """

    found: bool
    k: int | None = None
    product: Polynomial | None = None
    max_k: int = 0
    witnesses: list[tuple[int, Exponent]] = field(default_factory=list)


def _require_homogeneous(f: Polynomial) -> None:
    if not f.is_homogeneous():
        raise ValueError("f must be homogeneous")


def polya_exponent(f: Polynomial, max_k: int = 200) -> PolyaResult:
    """Least ``k <= max_k`` with ``(x1+...+xn)^k f`` coefficient-nonnegative."""
    _require_homogeneous(f)
    if f.is_zero():
        raise ValueError("f must be nonzero")
    s = Polynomial.simplex_form(f.nvars)
    witnesses = []
    cur = f
    for k in range(max_k + 1):
        ok, e = is_nonneg_coeffs(cur)
        if ok:
            return PolyaResult(True, k, cur, max_k, witnesses)
        witnesses.append((k, e))
        cur = cur * s
    return PolyaResult(False, None, None, max_k, witnesses)


def simplex_positive(f: Polynomial, max_k: int = 200) -> int | None:
    """One-sided positivity test on the simplex.

    A returned ``k`` certifies ``f >= 0`` on the simplex (positive wherever a
    surviving monomial is positive). ``None`` means unknown, not negative.
    """
    _require_homogeneous(f)
    if f.is_zero():
        return None
    res = polya_exponent(f, max_k)
    return res.k if res.found else None


def falling_factorial(a, b, m: int) -> Fraction:
    """``(a)_b^m = a (a - b) (a - 2b) ... (a - (m-1) b)``; empty product is 1."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    a, b = Fraction(a), Fraction(b)
    out = Fraction(1)
    for i in range(m):
        out *= a - i * b
    return out


def _falling_poly(var: Polynomial, eps: Fraction, m: int) -> Polynomial:
    out = Polynomial.constant(var.nvars, 1)
    for i in range(m):
        out = out * (var - eps * i)
    return out


def f_epsilon(f: Polynomial, eps) -> Polynomial:
    """Replace each power ``x_i^m`` in ``f`` by the falling power ``(x_i)_eps^m``."""
    _require_homogeneous(f)
    eps = Fraction(eps)
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    xs = Polynomial.variables(f.nvars)
    cache: dict[tuple[int, int], Polynomial] = {}
    out = Polynomial.zero(f.nvars)
    for e, c in f.terms.items():
        term = Polynomial.constant(f.nvars, c)
        for i, m in enumerate(e):
            if m:
                if (i, m) not in cache:
                    cache[(i, m)] = _falling_poly(xs[i], eps, m)
                term = term * cache[(i, m)]
        out = out + term
    return out


def _compositions(total: int, n: int):
    if n == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, n - 1):
            yield (first,) + rest


def coefficient_identity_check(f: Polynomial, k: int) -> bool:
    """Check the closed form of the coefficients of ``(x1+...+xn)^k f``.

    For every ``alpha`` with ``|alpha| = k + d`` the coefficient of
    ``x^alpha`` must equal
    ``k! (k+d)^d / prod(alpha_i!) * f_eps(alpha / (k+d))`` with ``eps = 1/(k+d)``.
    The left side comes from polynomial multiplication, the right side from
    evaluating :func:`f_epsilon`.
    """
    _require_homogeneous(f)
    if f.is_zero():
        return True
    d = f.degree()
    n = k + d
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and k + deg(f) >= 1")
    lhs = Polynomial.simplex_form(f.nvars) ** k * f
    fe = f_epsilon(f, Fraction(1, n))
    for alpha in _compositions(n, f.nvars):
        prefactor = Fraction(math.factorial(k) * n**d, math.prod(math.factorial(a) for a in alpha))
        rhs = prefactor * evaluate(fe, [Fraction(a, n) for a in alpha])
        if lhs.coeff(alpha) != rhs:
            return False
    return True


def verify_polya(f: Polynomial, k: int, product: Polynomial) -> bool:
    """Re-expand ``(x1+...+xn)^k f`` and compare with ``product``; also require no negative coefficients."""
    if product != Polynomial.simplex_form(f.nvars) ** k * f:
        return False
    return is_nonneg_coeffs(product)[0]


def verify_witnesses(f: Polynomial, witnesses: Sequence[tuple[int, Exponent]]) -> bool:
    """Each ``(k, e)`` must point at a negative coefficient of ``(x1+...+xn)^k f``."""
    s = Polynomial.simplex_form(f.nvars)
    for k, e in witnesses:
        if (s**k * f).coeff(e) >= 0:
            return False
    return True

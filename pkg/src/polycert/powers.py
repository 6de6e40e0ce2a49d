"""Eventual nonnegativity of the coefficients of powers ``f^k``.

:func:`stabilize` finds the least ``k0`` with ``f^k`` coefficient-nonnegative
for every ``k >= k0``. The infinite tail is sealed with a numerical semigroup:
once ``f^l`` and ``f^(l+1)`` are nonnegative, every exponent
``a*l + b*(l+1)`` with ``a, b >= 1`` is a product of nonnegative powers, and
all exponents from the conductor on have that form. Exponents below the
conductor are checked by expansion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .polyring import Exponent, Polynomial, evaluate, is_nonneg_coeffs
from .support import log_set, newton_vertices
from .lp import Constraint, feasible_point
from .valuation import FaceData, check_addass


# ------------------------------------------------------- numerical semigroups


@dataclass(frozen=True)
class SemigroupParams:
    """The set ``{a*l1 + b*l2 : a, b >= k}`` for coprime positive ``l1, l2``."""

    l1: int
    l2: int
    k: int = 0

    def __post_init__(self):
        if self.l1 < 1 or self.l2 < 1 or self.k < 0:
            raise ValueError("need l1, l2 >= 1 and k >= 0")
        if math.gcd(self.l1, self.l2) != 1:
            raise ValueError(f"l1={self.l1} and l2={self.l2} are not coprime")


def bezout(a: int, b: int) -> tuple[int, int]:
    """``(s, t)`` with ``s*a + t*b == gcd(a, b)``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_s, old_t


def conductor_bound(p: SemigroupParams) -> int:
    """An integer from which on every value is representable.

    With ``1 = s1*l1 + s2*l2`` and ``s1 < 0`` this is
    ``(l2-1)(-s1) l1 + k l1 + k l2``. When ``l1`` or ``l2`` is 1, ``k*(l1+l2)``.
    """
    l1, l2, k = p.l1, p.l2, p.k
    if l1 == 1 or l2 == 1:
        return k * (l1 + l2)
    s1, s2 = bezout(l1, l2)
    if s1 >= 0:
        # make s1 the negative coefficient by swapping roles
        l1, l2 = l2, l1
        s1, s2 = s2, s1
    return (l2 - 1) * (-s1) * l1 + k * l1 + k * l2


def semigroup_member(m: int, p: SemigroupParams) -> tuple[int, int] | None:
    """``(a, b)`` with ``a, b >= k`` and ``a*l1 + b*l2 == m``, smallest ``b`` first; ``None`` if impossible."""
    rest = m - p.k * (p.l1 + p.l2)
    if rest < 0:
        return None
    for extra_b in range(rest // p.l2 + 1):
        r = rest - extra_b * p.l2
        if r % p.l1 == 0:
            return p.k + r // p.l1, p.k + extra_b
    return None


def frobenius_conductor(p: SemigroupParams) -> int:
    """Least ``m`` such that every integer ``>= m`` is in the semigroup, by enumeration below the bound."""
    bound = conductor_bound(p)
    for m in range(bound - 1, -1, -1):
        if semigroup_member(m, p) is None:
            return m + 1
    return 0


# --------------------------------------------------------------- power checks


def power_nonneg(f: Polynomial, k: int) -> tuple[bool, Exponent | None]:
    if k < 1:
        raise ValueError("k must be positive")
    return is_nonneg_coeffs(f**k)


def _ones(f: Polynomial) -> Fraction:
    return evaluate(f, [1] * f.nvars)


@dataclass
class HypothesisReport:
    """Diagnostics for the power-stabilization hypotheses.

    ``definite_negative`` is ``(vertex, beta)`` when the coefficient of
    ``x^((k-1)*vertex + beta)`` in ``f^k`` is ``k * c_vertex^(k-1) * c_beta < 0``
    for every ``k``; then no power of ``f`` is ever nonnegative.
    """

    value_at_ones: Fraction
    first_nonneg_power: int | None
    initial_parts_nonneg: bool
    failing_face: FaceData | None
    definite_negative: tuple[Exponent, Exponent] | None


def _uniquely_reached(beta: Exponent, shifted: list[tuple[int, ...]], nvars: int) -> bool:
    """Whether ``beta`` is not a sum of two or more nonzero points of ``shifted``.

    ``shifted`` is a support translated so that a vertex sits at the origin;
    a weight positive on all nonzero points bounds the search.
    """
    zero = (0,) * nvars
    nonzero = [p for p in shifted if p != zero]
    w = feasible_point([Constraint(p, ">=", 1) for p in nonzero], nvars, nonneg_vars=())
    if w is None:
        return False
    cap = sum((Fraction(a) * b for a, b in zip(w, beta)), Fraction(0))
    # sums of j >= 2 nonzero points have weight >= j, so j <= cap
    level = set(nonzero)
    j = 1
    while j < cap:
        j += 1
        nxt = set()
        for x in level:
            for p in nonzero:
                y = tuple(a + b for a, b in zip(x, p))
                if sum((Fraction(a) * b for a, b in zip(w, y)), Fraction(0)) <= cap:
                    nxt.add(y)
        if beta in nxt:
            return False
        level = nxt
    return True


def definite_negative(f: Polynomial) -> tuple[Exponent, Exponent] | None:
    """Find ``(vertex, beta)`` forcing a negative coefficient in every power, if the pattern occurs.

    Sound but incomplete: only a negative ``beta`` that is reached from a
    positive vertex in exactly one way is detected.
    """
    terms = f.terms
    negatives = sorted(e for e, c in terms.items() if c < 0)
    if not negatives:
        return None
    supp = sorted(log_set(f).points)
    for v in sorted(newton_vertices(f).points):
        if terms[v] <= 0:
            continue
        shifted = [tuple(a - b for a, b in zip(p, v)) for p in supp]
        for beta in negatives:
            if beta == v:
                continue
            b = tuple(a - c for a, c in zip(beta, v))
            if _uniquely_reached(b, shifted, f.nvars):
                return v, beta
    return None


def check_hypotheses(f: Polynomial, probe_powers: int = 20) -> HypothesisReport:
    if f.is_zero():
        raise ValueError("f must be nonzero")
    first = None
    for k, fk in enumerate(f.powers()):
        if k == 0:
            continue
        if k > probe_powers:
            break
        if is_nonneg_coeffs(fk)[0]:
            first = k
            break
    nonneg, face = check_addass(f)
    return HypothesisReport(_ones(f), first, nonneg, face, definite_negative(f))


# --------------------------------------------------------------- stabilization


@dataclass
class StabilizationReport:
    """Outcome of :func:`stabilize`.

    ``stabilized``: ``f^j`` nonnegative for ``j`` in ``[k0, conductor]``
    (recorded in ``checked``), sealed beyond the conductor by the pair.
    ``no_power_found``: ``witnesses`` lists ``(k, exponent)`` for every
    failing power up to ``max_power``.
    ``rejected``: a hypothesis fails; see ``reason``.
    """

    outcome: Literal["stabilized", "no_power_found", "rejected"]
    k0: int | None = None
    pair: tuple[int, int] | None = None
    conductor: int | None = None
    checked: list[tuple[int, bool]] = field(default_factory=list)
    minimality_witness: Exponent | None = None
    max_power: int | None = None
    witnesses: list[tuple[int, Exponent]] = field(default_factory=list)
    reason: str | None = None

    @property
    def stabilized(self) -> bool:
        return self.outcome == "stabilized"


def stabilize(f: Polynomial, max_power: int = 200) -> StabilizationReport:
    """Least ``k0`` such that every ``f^k`` with ``k >= k0`` has no negative coefficient."""
    if f.is_zero():
        raise ValueError("f must be nonzero")
    at_ones = _ones(f)
    if at_ones <= 0:
        return StabilizationReport("rejected", reason=f"f(1,...,1) = {at_ones} is not positive")

    status: dict[int, tuple[bool, Exponent | None]] = {}
    gen = f.powers()
    next(gen)
    pair_start = None
    k = 0
    for k, fk in enumerate(gen, start=1):
        status[k] = is_nonneg_coeffs(fk)
        if k >= 2 and status[k][0] and status[k - 1][0]:
            pair_start = k - 1
            break
        if k >= max_power:
            break
    if pair_start is None:
        wit = [(j, e) for j, (ok, e) in sorted(status.items()) if not ok]
        return StabilizationReport("no_power_found", max_power=max_power, witnesses=wit)

    params = SemigroupParams(pair_start, pair_start + 1, 1)
    m = frobenius_conductor(params)
    for j, fj in enumerate(gen, start=k + 1):
        if j > m:
            break
        status[j] = is_nonneg_coeffs(fj)
    k0 = m
    while k0 > 1 and status[k0 - 1][0]:
        k0 -= 1
    if k0 == m and not status[m][0]:
        # cannot happen: the conductor is a product of the two checked powers
        raise AssertionError("conductor power is not nonnegative")
    checked = [(j, status[j][0]) for j in range(1, m + 1)]
    witness = status[k0 - 1][1] if k0 > 1 else None
    return StabilizationReport(
        "stabilized",
        k0=k0,
        pair=(params.l1, params.l2),
        conductor=m,
        checked=checked,
        minimality_witness=witness,
        max_power=max_power,
    )


def odd_power_corollary(f: Polynomial, l: int, max_power: int = 200) -> StabilizationReport:
    """Stabilization when some odd power ``f^l`` is known to be nonnegative."""
    if l < 1 or l % 2 == 0:
        raise ValueError("l must be an odd positive integer")
    if f.is_zero():
        return StabilizationReport("rejected", reason="f is the zero polynomial")
    ok, e = power_nonneg(f, l)
    if not ok:
        raise ValueError(f"f^{l} has a negative coefficient at {e}")
    # f^l(1,...,1) = f(1,...,1)^l > 0 and l odd force f(1,...,1) > 0
    return stabilize(f, max_power)


def verify_seal(f: Polynomial, report: StabilizationReport, j: int) -> bool:
    """Rebuild ``f^j`` from the verified pair powers and check it is nonnegative and correct."""
    l1, l2 = report.pair
    ab = semigroup_member(j, SemigroupParams(l1, l2, 1))
    if ab is None:
        return False
    a, b = ab
    built = (f**l1) ** a * (f**l2) ** b
    return is_nonneg_coeffs(built)[0] and built == f**j

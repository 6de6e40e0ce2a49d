"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Polynomial` maps exponent tuples to nonzero :class:`fractions.Fraction`
coefficients. Values are immutable; arithmetic returns new objects.

Text form (parse and print)::

    x1^2 - x1*x2 + x2^2
    1/2*x1^3 + 3 x2 - 7/3

Variables are ``x1 .. xn`` (1-based). Printing uses descending graded
lexicographic order, and ``parse(str(p)) == p`` always holds.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

Exponent = tuple[int, ...]
Scalar = Union[int, Fraction]

# degree of the zero polynomial
NEG_INF = float("-inf")


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"coefficient must be int, Fraction or str, not {type(c).__name__}")


def _grlex_key(e: Exponent):
    return (sum(e), e)


class Polynomial:
    """Polynomial in ``nvars`` variables over the rationals."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], Scalar] | None = None):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        self.nvars = nvars
        clean: dict[Exponent, Fraction] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(a) for a in exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {nvars}")
            if any(a < 0 for a in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = _as_fraction(c)
            if c:
                total = clean.get(exp, 0) + c
                if total:
                    clean[exp] = total
                else:
                    clean.pop(exp, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exponent, Fraction]) -> "Polynomial":
        # trusted constructor: keys valid, values nonzero Fractions
        p = object.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: Scalar) -> "Polynomial":
        c = _as_fraction(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def monomial(cls, exp: Sequence[int], c: Scalar = 1) -> "Polynomial":
        return cls(len(exp), {tuple(exp): c})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "Polynomial":
        """The variable ``x_{i+1}`` (``i`` is 0-based)."""
        exp = [0] * nvars
        exp[i] = 1
        return cls._raw(nvars, {tuple(exp): Fraction(1)})

    @classmethod
    def variables(cls, nvars: int) -> list["Polynomial"]:
        return [cls.variable(i, nvars) for i in range(nvars)]

    @classmethod
    def simplex_form(cls, nvars: int) -> "Polynomial":
        """``x1 + ... + xn``."""
        return cls._raw(nvars, {e: Fraction(1) for e in _unit_vectors(nvars)})

    # container protocol

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponent, Fraction]]:
        """Terms in descending graded lexicographic order."""
        for e in sorted(self._terms, key=_grlex_key, reverse=True):
            yield e, self._terms[e]

    def coeff(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def support(self) -> frozenset[Exponent]:
        return frozenset(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self):
        """Total degree; ``NEG_INF`` for the zero polynomial."""
        if not self._terms:
            return NEG_INF
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        """True for zero and for polynomials whose terms all share one degree."""
        return len({sum(e) for e in self._terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    # arithmetic

    def _check(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"dimension mismatch: {self.nvars} vs {other.nvars} variables")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c: Scalar) -> "Polynomial":
        c = _as_fraction(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(self.nvars, {e: v * c for e, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        return _mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(self.nvars, 1)
        for _ in range(k):
            result = result * self
        return result

    def powers(self) -> Iterator["Polynomial"]:
        """Yield ``p^0, p^1, p^2, ...`` by iterated multiplication."""
        cur = Polynomial.constant(self.nvars, 1)
        while True:
            yield cur
            cur = cur * self

    # comparison and hashing

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Polynomial.constant(self.nvars, other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # evaluation

    def __call__(self, *x) -> Fraction:
        if len(x) == 1 and isinstance(x[0], (list, tuple)):
            x = tuple(x[0])
        return evaluate(self, x)

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def _unit_vectors(n: int) -> list[Exponent]:
    return [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]


def _integer_form(p: Polynomial) -> tuple[dict[Exponent, int], int]:
    den = 1
    for c in p._terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    return {e: c.numerator * (den // c.denominator) for e, c in p._terms.items()}, den


def _mul(p: Polynomial, q: Polynomial) -> Polynomial:
    if not p._terms or not q._terms:
        return Polynomial.zero(p.nvars)
    # multiply over the integers after clearing denominators; Fraction arithmetic
    # in the inner loop is an order of magnitude slower
    a, da = _integer_form(p)
    b, db = _integer_form(q)
    if len(a) < len(b):
        a, b = b, a
    acc: dict[Exponent, int] = {}
    get = acc.get
    for eb, cb in b.items():
        for ea, ca in a.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            acc[e] = get(e, 0) + ca * cb
    den = da * db
    if den == 1:
        return Polynomial._raw(p.nvars, {e: Fraction(c) for e, c in acc.items() if c})
    return Polynomial._raw(p.nvars, {e: Fraction(c, den) for e, c in acc.items() if c})


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def pow(p: Polynomial, k: int) -> Polynomial:  # noqa: A001 - mirrors the ring operation name
    return p**k


def evaluate(p: Polynomial, x: Sequence[Scalar]) -> Fraction:
    """Exact value ``p(x)``."""
    if len(x) != p.nvars:
        raise ValueError(f"point has {len(x)} coordinates, polynomial has {p.nvars} variables")
    x = [_as_fraction(v) for v in x]
    total = Fraction(0)
    for e, c in p._terms.items():
        term = c
        for xi, a in zip(x, e):
            if a:
                term *= xi**a
        total += term
    return total


def graded_parts(p: Polynomial) -> list[tuple[int, Polynomial]]:
    """Split ``p`` into homogeneous components, ascending by degree."""
    parts: dict[int, dict[Exponent, Fraction]] = {}
    for e, c in p._terms.items():
        parts.setdefault(sum(e), {})[e] = c
    return [(d, Polynomial._raw(p.nvars, parts[d])) for d in sorted(parts)]


def homogenize_pad(p: Polynomial, d: int) -> Polynomial:
    """Homogeneous polynomial of degree ``d`` congruent to ``p`` mod ``x1+...+xn-1``.

    Each degree-``j`` component is multiplied by ``(x1+...+xn)^(d-j)``, so the
    result agrees with ``p`` on the standard simplex.
    """
    if p.is_zero():
        return p
    if d < p.degree():
        raise ValueError(f"target degree {d} is below deg(p) = {p.degree()}")
    s = Polynomial.simplex_form(p.nvars)
    spow = list(zip(range(d + 1), s.powers()))
    out = Polynomial.zero(p.nvars)
    for j, part in graded_parts(p):
        out = out + part * spow[d - j][1]
    return out


def is_nonneg_coeffs(p: Polynomial) -> tuple[bool, Exponent | None]:
    """Return ``(True, None)`` if no coefficient is negative, else ``(False, witness)``.

    The witness is the graded-lex smallest exponent carrying a negative
    coefficient, which makes it deterministic.
    """
    neg = [e for e, c in p._terms.items() if c < 0]
    if not neg:
        return True, None
    return False, min(neg, key=_grlex_key)


def divide_by_simplex_form_minus_one(p: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Divide ``p`` by ``L = x1+...+xn-1``; return ``(quotient, remainder)``.

    ``L`` is monic in ``xn``, so this is synthetic division in ``xn`` by the
    root ``r = 1 - x1 - ... - x_{n-1}``. The remainder is free of ``xn``.
    """
    n = p.nvars
    # coefficients of xn^j, as polynomials in the remaining variables (kept in n vars)
    by_power: dict[int, dict[Exponent, Fraction]] = {}
    for e, c in p._terms.items():
        by_power.setdefault(e[-1], {})[e[:-1] + (0,)] = c
    if not by_power:
        return Polynomial.zero(n), Polynomial.zero(n)
    top = max(by_power)
    root = Polynomial.constant(n, 1) - Polynomial.simplex_form(n) + Polynomial.variable(n - 1, n)
    xn = Polynomial.variable(n - 1, n)
    coeffs = [Polynomial._raw(n, by_power.get(j, {})) for j in range(top + 1)]
    # Horner: q_{top-1} = c_top, q_{j-1} = c_j + r q_j, remainder = c_0 + r q_0
    quotient = Polynomial.zero(n)
    carry = Polynomial.zero(n)
    for j in range(top, 0, -1):
        carry = coeffs[j] + root * carry
        quotient = quotient + carry * xn ** (j - 1)
    remainder = coeffs[0] + root * carry
    return quotient, remainder


# ---------------------------------------------------------------- text format

_TERM_RE = re.compile(
    r"""
    (?P<sign>[+-])?
    (?P<coef>\d+(?:/\d+)?)?
    (?P<star>\*)?
    (?P<mono>x\d+(?:\^\d+)?(?:\*?x\d+(?:\^\d+)?)*)?
    """,
    re.VERBOSE,
)
_VAR_RE = re.compile(r"x(\d+)(?:\^(\d+))?")


class PolynomialSyntaxError(ValueError):
    pass


def _parse_terms(text: str) -> list[tuple[Fraction, dict[int, int]]]:
    s = re.sub(r"\s+", "", text)
    if not s:
        raise PolynomialSyntaxError("empty polynomial text")
    pos = 0
    out = []
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if m is None or m.end() == pos:
            raise PolynomialSyntaxError(f"cannot parse polynomial at {s[pos:]!r}")
        sign, coef, star, mono = m.group("sign", "coef", "star", "mono")
        if sign is None and not first:
            raise PolynomialSyntaxError(f"missing '+' or '-' before {s[pos:]!r}")
        if coef is None and mono is None:
            raise PolynomialSyntaxError(f"empty term at {s[pos:]!r}")
        if star and (coef is None or mono is None):
            raise PolynomialSyntaxError(f"misplaced '*' at {s[pos:]!r}")
        try:
            c = Fraction(coef) if coef is not None else Fraction(1)
        except ZeroDivisionError:
            raise PolynomialSyntaxError(f"zero denominator in {coef!r}") from None
        if sign == "-":
            c = -c
        powers: dict[int, int] = {}
        if mono:
            for vm in _VAR_RE.finditer(mono):
                idx = int(vm.group(1))
                if idx < 1:
                    raise PolynomialSyntaxError("variable indices start at x1")
                powers[idx] = powers.get(idx, 0) + int(vm.group(2) or 1)
        out.append((c, powers))
        pos = m.end()
        first = False
    return out


def parse(text: str, nvars: int | None = None) -> Polynomial:
    """Parse the text grammar. ``nvars`` defaults to the largest index used (at least 1)."""
    terms = _parse_terms(text)
    used = max((max(pw) for _, pw in terms if pw), default=1)
    if nvars is None:
        nvars = used
    elif used > nvars:
        raise PolynomialSyntaxError(f"x{used} used but only {nvars} variables declared")
    out: dict[Exponent, Fraction] = {}
    for c, pw in terms:
        e = tuple(pw.get(i + 1, 0) for i in range(nvars))
        out[e] = out.get(e, Fraction(0)) + c
    return Polynomial(nvars, out)


def parse_many(texts: Iterable[str], nvars: int | None = None) -> list[Polynomial]:
    """Parse several polynomials into one common ring."""
    texts = list(texts)
    if nvars is None:
        nvars = 1
        for t in texts:
            nvars = max(nvars, parse(t).nvars)
    return [parse(t, nvars) for t in texts]


def format_monomial(e: Sequence[int]) -> str:
    parts = []
    for i, a in enumerate(e):
        if a == 1:
            parts.append(f"x{i + 1}")
        elif a > 1:
            parts.append(f"x{i + 1}^{a}")
    return "*".join(parts)


def format_poly(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    chunks = []
    for e, c in p.items():
        mono = format_monomial(e)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(chunks)

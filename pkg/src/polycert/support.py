"""Supports of polynomials: Log sets, Minkowski sums, Newton polytopes, atoms.

Polytopes are only ever represented by point sets. Vertex and face claims are
backed by exact LP or exact linear-algebra certificates, and every
:class:`FaceData` can be re-checked with :meth:`FaceData.check`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .lp import Constraint, LinearProgram, feasible_point, solve
from .polyring import Polynomial, is_nonneg_coeffs

Point = tuple[int, ...]


@dataclass(frozen=True)
class SupportSet:
    """A finite set of integer points in ``nvars`` dimensions.

    Log sets hold exponent vectors and are therefore nonnegative; supports
    shifted by a vertex may carry negative entries.
    """

    nvars: int
    points: frozenset[Point]

    def __init__(self, nvars: int, points: Iterable[Sequence[int]] = ()):
        pts = frozenset(tuple(int(a) for a in p) for p in points)
        for p in pts:
            if len(p) != nvars:
                raise ValueError(f"point {p} does not have {nvars} coordinates")
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "points", pts)

    def __iter__(self) -> Iterator[Point]:
        return iter(sorted(self.points))

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p) -> bool:
        return tuple(p) in self.points

    def __le__(self, other: "SupportSet") -> bool:
        return self.points <= other.points

    def shift(self, v: Sequence[int]) -> "SupportSet":
        """Translate every point by ``-v``."""
        return SupportSet(self.nvars, (tuple(a - b for a, b in zip(p, v)) for p in self.points))

    def to_list(self) -> list[list[int]]:
        return [list(p) for p in sorted(self.points)]


@dataclass(frozen=True)
class FaceData:
    """A proper face of a point configuration's convex hull.

    ``members`` are exactly the configuration points attaining the maximum
    ``value`` of ``<normal, .>``; all other points score strictly less.
    """

    normal: tuple[Fraction, ...]
    value: Fraction
    members: SupportSet
    dim: int

    def check(self, points: Iterable[Sequence[int]]) -> bool:
        for p in points:
            s = _dot(self.normal, p)
            if tuple(p) in self.members.points:
                if s != self.value:
                    return False
            elif s >= self.value:
                return False
        return True


def _dot(w: Sequence, p: Sequence) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(w, p)), Fraction(0))


def _add(p: Point, q: Point) -> Point:
    return tuple(a + b for a, b in zip(p, q))


def _sub(p: Point, q: Point) -> Point:
    return tuple(a - b for a, b in zip(p, q))


# ------------------------------------------------------------------ Log sets


def log_set(p: Polynomial) -> SupportSet:
    """Exponents carrying a nonzero coefficient."""
    return SupportSet(p.nvars, p.support())


def minkowski_sum(a: SupportSet, b: SupportSet) -> SupportSet:
    if a.nvars != b.nvars:
        raise ValueError(f"dimension mismatch: {a.nvars} vs {b.nvars}")
    return SupportSet(a.nvars, {_add(p, q) for p in a.points for q in b.points})


def bounded_ring_member(f: Polynomial, g: Polynomial, k: int) -> bool:
    """Whether ``f / g^k`` lies in the bounded ring ``A(g)``, i.e. ``Log(f)`` is inside ``Log(g^k)``."""
    ok, _ = is_nonneg_coeffs(g)
    if g.is_zero() or not ok:
        raise ValueError("g must be nonzero with nonnegative coefficients")
    if f.nvars != g.nvars:
        raise ValueError("dimension mismatch")
    return f.support() <= (g**k).support()


# --------------------------------------------------------- rational algebra


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    m = [list(r) for r in rows]
    pivots: list[int] = []
    ncols = len(m[0]) if m else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def _nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = _rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def _primitive(v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Scale a rational vector to coprime integers, keeping its direction."""
    den = 1
    for x in v:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    g = g or 1
    return tuple(Fraction(x // g) for x in ints)


def affine_rank(points: Sequence[Point]) -> int:
    if len(points) <= 1:
        return 0
    base = points[0]
    rows = [[Fraction(x) for x in _sub(p, base)] for p in points[1:]]
    return len(_rref(rows)[1])


# ------------------------------------------------------- Newton polytope


def hull_combination(v: Sequence[int], others: Sequence[Point]) -> list[Fraction] | None:
    """Convex weights expressing ``v`` through ``others``, or ``None`` if ``v`` is outside their hull."""
    if not others:
        return None
    n = len(v)
    cons = [Constraint([1] * len(others), "==", 1)]
    for i in range(n):
        cons.append(Constraint([p[i] for p in others], "==", v[i]))
    return feasible_point(cons, len(others))


def vertices(s: SupportSet) -> SupportSet:
    """Extreme points of ``conv(s)``; a point is kept iff the hull LP on the rest is infeasible."""
    pts = sorted(s.points)
    out = []
    for i, v in enumerate(pts):
        rest = pts[:i] + pts[i + 1 :]
        if hull_combination(v, rest) is None:
            out.append(v)
    return SupportSet(s.nvars, out)


def newton_vertices(p: Polynomial) -> SupportSet:
    if p.is_zero():
        raise ValueError("the zero polynomial has no Newton polytope")
    return vertices(log_set(p))


def _facets(pts: list[Point], verts: list[Point], dim: int):
    """Facet normals (primitive integer, within the affine hull) keyed by vertex set."""
    base = verts[0]
    span_rows, _ = _rref([[Fraction(x) for x in _sub(v, base)] for v in verts[1:]])
    facets: dict[frozenset[Point], tuple[Fraction, ...]] = {}
    for subset in combinations(verts, dim):
        diffs = [_sub(u, subset[0]) for u in subset[1:]]
        if diffs and len(_rref([[Fraction(x) for x in d] for d in diffs])[1]) != dim - 1:
            continue
        # normal n = sum c_i b_i over the hull's direction basis, orthogonal to the subset
        system = [[_dot(b, d) for b in span_rows] for d in diffs]
        null = _nullspace(system, len(span_rows))
        if len(null) != 1:
            continue
        c = null[0]
        normal = [sum((ci * b[j] for ci, b in zip(c, span_rows)), Fraction(0)) for j in range(len(base))]
        h = _dot(normal, subset[0])
        scores = [_dot(normal, p) - h for p in pts]
        if all(x <= 0 for x in scores):
            pass
        elif all(x >= 0 for x in scores):
            normal = [-x for x in normal]
        else:
            continue
        key = frozenset(v for v in verts if _dot(normal, v) == _dot(normal, subset[0]))
        if key not in facets:
            facets[key] = _primitive(normal)
    return facets


def faces(s: SupportSet) -> list[FaceData]:
    """All proper faces of ``conv(s)``, from vertices up to facets.

    Facets come from affinely independent vertex subsets; lower faces are
    intersections of facets. A face's normal is the primitive integer form
    of the sum of its facets' primitive normals. Intended for small supports.
    """
    verts = sorted(vertices(s).points)
    if len(verts) <= 1:
        return []
    pts = sorted(s.points)
    dim = affine_rank(verts)
    facets = _facets(pts, verts, dim)

    vertex_sets = set(facets)
    frontier = set(facets)
    while frontier:
        new = set()
        for a in frontier:
            for b in facets:
                c = a & b
                if c and c not in vertex_sets:
                    new.add(c)
        vertex_sets |= new
        frontier = new

    out = []
    for vs in vertex_sets:
        total = [Fraction(0)] * s.nvars
        for key, normal in facets.items():
            if vs <= key:
                total = [x + y for x, y in zip(total, normal)]
        normal = _primitive(total)
        value = max(_dot(normal, p) for p in pts)
        members = SupportSet(s.nvars, [p for p in pts if _dot(normal, p) == value])
        face = FaceData(normal, value, members, affine_rank(sorted(vs)))
        if not face.check(pts) or set(vs) != {v for v in verts if v in members}:
            raise AssertionError(f"face certificate failed for vertex set {sorted(vs)}")
        out.append(face)
    out.sort(key=lambda f: (f.dim, sorted(f.members.points)))
    return out


def newton_faces(p: Polynomial) -> list[FaceData]:
    if p.is_zero():
        raise ValueError("the zero polynomial has no Newton polytope")
    return faces(log_set(p))


# ------------------------------------------------------------------ atoms


def atoms(s: SupportSet) -> SupportSet:
    """Nonzero points of ``s`` that are not a sum of two nonzero points of ``s``."""
    zero = (0,) * s.nvars
    nonzero = [p for p in s.points if p != zero]
    sums = {_add(a, b) for a in nonzero for b in nonzero}
    return SupportSet(s.nvars, [p for p in nonzero if p not in sums])


def max_atom_count(s: SupportSet) -> int:
    """Least ``k`` such that every point of ``s`` is a sum of at most ``k`` atoms of ``s``.

    Sums are searched breadth-first, bounded by a weight ``w`` with
    ``<w, a> >= 1`` on every atom (found by LP). Raises ``ValueError`` when
    some point is not a finite sum of atoms.
    """
    zero = (0,) * s.nvars
    nonzero = [p for p in s.points if p != zero]
    if not nonzero:
        return 0
    ats = sorted(atoms(s).points)
    if len(ats) == len(nonzero):
        return 1
    if not ats:
        raise ValueError("support has no atoms; its points are not finite sums of atoms")
    w = feasible_point([Constraint(a, ">=", 1) for a in ats], s.nvars, nonneg_vars=())
    if w is None:
        raise ValueError("atoms are not pointed; sums of atoms cannot be bounded")
    cap = max(_dot(w, p) for p in nonzero)
    need = set(nonzero)
    best = 0
    frontier = {zero}
    seen = {zero}
    k = 0
    while need and frontier:
        k += 1
        nxt = set()
        for x in frontier:
            for a in ats:
                y = _add(x, a)
                if y not in seen and _dot(w, y) <= cap:
                    seen.add(y)
                    nxt.add(y)
        hit = need & nxt
        if hit:
            need -= hit
            best = k
        frontier = nxt
    if need:
        raise ValueError(f"points {sorted(need)} are not sums of atoms")
    return best


def gonflage_bound(f: Polynomial, l: int) -> int:
    """Atom-count bound ``k`` making ``(l*k - 1)*alpha + Log(f)`` lie in ``Log(f^(l*k))``.

    Computed per vertex ``alpha`` of the Newton polytope on ``Log(f) - alpha``;
    the maximum over vertices is returned. Requires ``f^l`` to have no
    negative coefficients.
    """
    _require_nonneg_power(f, l)
    supp = log_set(f)
    return max(max_atom_count(supp.shift(alpha)) for alpha in newton_vertices(f).points)


def verify_gonflage(f: Polynomial, l: int, k: int) -> bool:
    """Check ``(l*k - 1)*alpha + Log(f) <= Log(f^(l*k))`` for every vertex, by expansion."""
    _require_nonneg_power(f, l)
    big = (f ** (l * k)).support()
    m = l * k - 1
    for alpha in newton_vertices(f).points:
        for beta in f.support():
            if tuple(m * a + b for a, b in zip(alpha, beta)) not in big:
                return False
    return True


def _require_nonneg_power(f: Polynomial, l: int) -> None:
    if f.is_zero():
        raise ValueError("f must be nonzero")
    if l < 1:
        raise ValueError("l must be a positive integer")
    ok, e = is_nonneg_coeffs(f**l)
    if not ok:
        raise ValueError(f"f^{l} has a negative coefficient at {e}")

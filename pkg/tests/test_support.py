import random
from fractions import Fraction

import pytest
from scipy.optimize import linprog

from polycert.polyring import Polynomial, is_nonneg_coeffs, parse
from polycert.support import (
    SupportSet,
    affine_rank,
    atoms,
    bounded_ring_member,
    faces,
    gonflage_bound,
    hull_combination,
    log_set,
    max_atom_count,
    minkowski_sum,
    newton_faces,
    newton_vertices,
    verify_gonflage,
    vertices,
)

from helpers import random_poly


def S(*pts, n=None):
    pts = [p if isinstance(p, tuple) else (p,) for p in pts]
    return SupportSet(n or (len(pts[0]) if pts else 1), pts)


F = parse("x1^4 + x2^4 + 1 - x1*x2")


def test_log_set_examples():
    assert log_set(parse("1 - x1 + x1^3")) == S(0, 1, 3)
    assert log_set(F) == S((4, 0), (0, 4), (0, 0), (1, 1))
    assert len(log_set(Polynomial.zero(2))) == 0


def test_minkowski_examples():
    assert minkowski_sum(S(0, 1), S(0, 2)) == S(0, 1, 2, 3)
    assert minkowski_sum(SupportSet(1, []), S(0, 1)) == SupportSet(1, [])
    assert minkowski_sum(S((1, 0)), S((0, 1))) == S((1, 1))
    with pytest.raises(ValueError):
        minkowski_sum(S(0), S((0, 0)))


def test_newton_vertex_examples():
    assert newton_vertices(F) == S((4, 0), (0, 4), (0, 0))
    assert newton_vertices(parse("x1 + x2")) == S((1, 0), (0, 1))
    assert newton_vertices(parse("3*x1^2*x2", 2)) == S((2, 1))
    with pytest.raises(ValueError):
        newton_vertices(Polynomial.zero(2))


def test_non_vertex_has_convex_combination():
    lam = hull_combination((1, 1), [(4, 0), (0, 4), (0, 0)])
    assert lam is not None and sum(lam) == 1 and all(x >= 0 for x in lam)
    assert tuple(sum(l * p[i] for l, p in zip(lam, [(4, 0), (0, 4), (0, 0)])) for i in range(2)) == (1, 1)


def test_newton_face_examples():
    fs = newton_faces(F)
    assert sorted(len(f.members) for f in fs) == [1, 1, 1, 2, 2, 2]
    edges = {frozenset(f.members) for f in fs if f.dim == 1}
    assert edges == {
        frozenset({(4, 0), (0, 4)}),
        frozenset({(4, 0), (0, 0)}),
        frozenset({(0, 4), (0, 0)}),
    }
    segment = newton_faces(parse("x1 + x2"))
    assert sorted(tuple(f.members) for f in segment) == [((0, 1),), ((1, 0),)]
    assert newton_faces(parse("x1*x2")) == []


def test_faces_of_tetrahedron():
    tet = S((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))
    fs = faces(tet)
    assert sorted(f.dim for f in fs) == [0] * 4 + [1] * 6 + [2] * 4
    assert all(f.check(tet) for f in fs)


def _float_is_vertex(v, pts):
    others = [p for p in pts if p != v]
    if not others:
        return True
    n = len(v)
    A_eq = [[p[i] for p in others] for i in range(n)] + [[1] * len(others)]
    res = linprog([0] * len(others), A_eq=A_eq, b_eq=list(v) + [1])
    return res.status == 2  # infeasible


def test_vertices_against_float_oracle():
    rng = random.Random(5)
    for _ in range(40):
        pts = {tuple(rng.randint(0, 4) for _ in range(2)) for _ in range(rng.randint(1, 8))}
        s = SupportSet(2, pts)
        expected = {v for v in pts if _float_is_vertex(v, sorted(pts))}
        assert set(vertices(s)) == expected


def test_faces_are_certified():
    rng = random.Random(6)
    for _ in range(25):
        n = rng.randint(1, 3)
        p = random_poly(rng, n, 3, rng.randint(2, 7))
        if p.is_zero():
            continue
        pts = list(log_set(p))
        for f in newton_faces(p):
            assert f.check(pts)
            assert affine_rank(list(f.members)) == f.dim


def test_atoms_examples():
    assert atoms(S(0, 1, 3)) == S(1, 3)
    assert atoms(S((1, 0), (0, 1))) == S((1, 0), (0, 1))
    assert len(atoms(S(0))) == 0


def test_max_atom_count_examples():
    assert max_atom_count(S(0, 1, 2, 3, 4)) == 4
    assert max_atom_count(S(0, 1, 3)) == 1
    assert max_atom_count(S(0)) == 0


def test_max_atom_count_against_dp():
    rng = random.Random(7)
    for _ in range(30):
        pts = {0} | {rng.randint(1, 12) for _ in range(rng.randint(1, 5))}
        s = S(*sorted(pts))
        atom_set = [a[0] for a in atoms(s)]
        # dynamic programming over integers: fewest atoms summing to m
        best = {0: 0}
        for m in range(1, max(pts) + 1):
            cands = [best[m - a] + 1 for a in atom_set if m - a in best]
            if cands:
                best[m] = min(cands)
        assert max_atom_count(s) == max(best[m] for m in pts)


def test_max_atom_count_shifted_support():
    # support of X^4+Y^4+1-XY shifted so that the vertex (4,0) is the origin
    s = log_set(F).shift((4, 0))
    assert max_atom_count(s) >= 1


def test_bounded_ring_member_examples():
    g = parse("1 + x1")
    assert bounded_ring_member(parse("x1^2"), g, 2)
    assert not bounded_ring_member(parse("x1^3"), g, 2)
    assert bounded_ring_member(Polynomial.zero(1), g, 0)
    with pytest.raises(ValueError):
        bounded_ring_member(parse("x1"), parse("1 - x1"), 1)


def _pairs(count, seed, nonneg=False):
    rng = random.Random(seed)
    while count:
        n = rng.randint(1, 3)
        p = random_poly(rng, n, 3, rng.randint(1, 4), nonneg=nonneg)
        q = random_poly(rng, n, 3, rng.randint(1, 4), nonneg=nonneg)
        if p.is_zero() or q.is_zero():
            continue
        count -= 1
        yield p, q


def test_log_of_product_is_inside_sum():
    for p, q in _pairs(100, 8):
        assert log_set(p * q) <= minkowski_sum(log_set(p), log_set(q))


def test_log_of_product_equals_sum_for_nonneg():
    for p, q in _pairs(100, 9, nonneg=True):
        assert log_set(p * q) == minkowski_sum(log_set(p), log_set(q))


def test_newton_polytope_of_product():
    for p, q in _pairs(60, 10):
        summed = minkowski_sum(newton_vertices(p), newton_vertices(q))
        assert newton_vertices(p * q) == vertices(summed)


def test_gonflage_examples():
    xy = parse("x1 + x2")
    assert all(verify_gonflage(xy, 1, k) for k in (1, 2, 3))
    assert gonflage_bound(parse("x1^2*x2"), 3) == 0
    assert verify_gonflage(parse("x1^2*x2"), 3, 2)
    assert gonflage_bound(parse("1 + x1"), 1) == 1
    assert all(verify_gonflage(parse("1 + x1"), 1, k) for k in (1, 2, 5))


def test_gonflage_requires_nonneg_power():
    with pytest.raises(ValueError):
        gonflage_bound(parse("1 - x1"), 1)


def test_gonflage_inclusion_beyond_bound():
    rng = random.Random(11)
    done = 0
    while done < 8:
        n = rng.randint(1, 2)
        f = random_poly(rng, n, 2, 3, nonneg=True)
        if f.is_zero():
            continue
        l = rng.randint(1, 2)
        k0 = max(gonflage_bound(f, l), 1)
        assert all(verify_gonflage(f, l, k) for k in (k0, k0 + 1, k0 + 3))
        done += 1
    # a negative coefficient, yet the square has none
    f = parse("1 + x1 - 1/2*x1^2 + x1^3 + x1^4")
    assert not is_nonneg_coeffs(f)[0] and is_nonneg_coeffs(f**2)[0]
    k0 = max(gonflage_bound(f, 2), 1)
    assert all(verify_gonflage(f, 2, k) for k in (k0, k0 + 1, k0 + 3))

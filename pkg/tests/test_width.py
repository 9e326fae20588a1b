from math import gcd

import pytest
from hypothesis import given, strategies as st

from conftest import DIAMOND_A, TRIANGLE, UNIT_SQUARE, cube
from subdet.errors import DomainError, PreconditionError
from subdet.exact import det, dot, matmul
from subdet.lp import Polyhedron, is_polytope, lp_optimize
from subdet.oracle import brute_width, enumerate_lattice_points
from subdet.width import (dual_candidates, min_over_cone, primitive_directions, proof_radius,
                          width_exact, width_lipschitz_bound)

SEGMENT = Polyhedron(((1, 0), (-1, 0), (0, 1), (0, -1)), (0, 0, 5, 0))


def polytopes(max_n=3, max_m=6, entries=3, rhs=(-2, 7)):
    def build(nm):
        n, m = nm
        return st.tuples(
            st.lists(st.lists(st.integers(-entries, entries), min_size=n, max_size=n),
                     min_size=m, max_size=m),
            st.lists(st.integers(*rhs), min_size=m, max_size=m))
    return (st.integers(1, max_n).flatmap(lambda n: st.tuples(st.just(n), st.integers(n + 1, max_m)))
            .flatmap(build).map(lambda ab: Polyhedron(*ab)).filter(is_polytope))


def unimodular_maps(n):
    def build(entries):
        U = tuple(tuple(entries[i * n:(i + 1) * n]) for i in range(n))
        return U
    return st.lists(st.integers(-2, 2), min_size=n * n, max_size=n * n).map(build).filter(
        lambda U: abs(det(U)) == 1)


def test_cube_width():
    for n in (1, 2, 3):
        res = width_exact(cube(n))
        assert res.width == 1 and res.certified
        assert sorted(map(abs, res.direction)) == [0] * (n - 1) + [1]


def test_triangle_width():
    res = width_exact(TRIANGLE)
    assert res.width == 2 and res.certified
    for d in ((1, 0), (0, 1), (1, -1)):
        hi = lp_optimize(TRIANGLE, d).objective
        lo = -lp_optimize(TRIANGLE, [-v for v in d]).objective
        assert hi - lo == 2


def test_flat_segment():
    res = width_exact(SEGMENT)
    assert res.width == 0 and res.direction == (1, 0)


def test_width_errors():
    with pytest.raises(DomainError):
        width_exact(Polyhedron(((1, 0), (0, 1)), (0, 0)))
    with pytest.raises(DomainError):
        width_exact(Polyhedron(((1,), (-1,)), (0, -1)))
    with pytest.raises(PreconditionError):
        width_exact(UNIT_SQUARE, radius=0)


def test_primitive_directions_shell():
    dirs = list(primitive_directions(2, 1))
    assert dirs == [(0, 1), (1, -1), (1, 0), (1, 1)]
    assert all(max(map(abs, d)) == 2 for d in primitive_directions(2, 2))


def test_dual_candidates_diamond():
    # the opposite-row dependencies give the directions (1, 1) and (1, -1) class
    cands = dual_candidates(DIAMOND_A)
    assert (1, 1) in cands and (1, -1) in cands


def test_min_over_cone_examples():
    x = min_over_cone(((1, 0), (0, 1)), (1, 1))
    assert x in ((1, 0), (0, 1))
    x = min_over_cone(((2, 0), (0, 3)), (1, 1))
    assert dot((1, 1), x) == 1
    assert min_over_cone(((1, 1), (0, 1)), (0, 1)) == (1, 0)


def test_lipschitz_examples():
    sq = UNIT_SQUARE.A
    assert width_lipschitz_bound(sq, (1, 1, 0, 0), (1, 1, 0, 0)) == 0
    assert width_lipschitz_bound(sq, (1, 1, 0, 0), (4, 1, 0, 0)) == 9
    assert width_lipschitz_bound(DIAMOND_A, (1, 1, 1, 1), (2, 1, 1, 1)) == 3
    with pytest.raises(DomainError):
        width_lipschitz_bound(sq, (1, 1, 0, 0), (-1, 1, 0, 0))


@given(polytopes())
def test_width_direction_attains_width(P):
    res = width_exact(P)
    d = res.direction
    assert any(d)
    g = 0
    for v in d:
        g = gcd(g, v)
    assert g == 1
    hi = lp_optimize(P, d).objective
    lo = -lp_optimize(P, [-v for v in d]).objective
    assert hi - lo == res.width
    assert dot(d, res.max_point) - dot(d, res.min_point) == res.width


@given(polytopes(max_n=2, entries=2))
def test_width_matches_oracle(P):
    res = width_exact(P, radius=5)
    ref = brute_width(P, 5)
    assert res.width == ref.width
    if res.certified:
        assert res.width == brute_width(P, max(res.radius, proof_radius(P), 1)).width


@given(polytopes(max_n=2, max_m=5, entries=2), st.data())
def test_width_invariant_under_unimodular_maps(P, data):
    n = P.n
    U = data.draw(unimodular_maps(n))
    t = data.draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n))
    # x = U z + t maps P to {z : (A U) z <= b - A t}
    AU = matmul(P.A, U)
    Q = Polyhedron(AU, tuple(bi - dot(row, t) for row, bi in zip(P.A, P.b)))
    assert width_exact(P).width == width_exact(Q).width


@given(polytopes(max_n=2, max_m=4, entries=2, rhs=(0, 4)), st.data())
def test_cost_perturbation_bound(P, data):
    points = [x for x in enumerate_lattice_points(P) if any(x)]
    if not points:
        return
    n = P.n
    c1 = data.draw(st.lists(st.integers(-4, 4), min_size=n, max_size=n))
    c2 = data.draw(st.lists(st.integers(-4, 4), min_size=n, max_size=n))
    z1 = min(dot(c1, x) for x in points)
    x2 = min(points, key=lambda x: (dot(c2, x), x))
    z2 = dot(c2, x2)
    gap = max(abs(a - b) for a, b in zip(c1, c2))
    x1 = min(points, key=lambda x: (dot(c1, x), x))
    # each minimum is within gap * |x|_1 of the other cost evaluated at its minimizer
    assert z1 - z2 <= gap * sum(map(abs, x2))
    assert z2 - z1 <= gap * sum(map(abs, x1))

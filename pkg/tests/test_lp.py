from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from conftest import DIAMOND_A, TRIANGLE, UNIT_SQUARE
from subdet.errors import PreconditionError, ShapeError
from subdet.exact import det, dot, inverse_rat, rank, submatrix
from subdet.lp import (INFEASIBLE, OPTIMAL, UNBOUNDED, Polyhedron, enumerate_vertices,
                       is_polytope, lp_optimize, tangent_cone)

DIAMOND = Polyhedron(DIAMOND_A, (1, 1, 1, 1))
EMPTY = Polyhedron(((1,), (-1,)), (0, -1))


def polyhedra(max_n=3, max_m=6):
    return st.integers(1, max_n).flatmap(lambda n: st.integers(n, max_m).flatmap(
        lambda m: st.tuples(
            st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=m,
                     max_size=m),
            st.lists(st.integers(-4, 8), min_size=m, max_size=m),
            st.lists(st.integers(-3, 3), min_size=n, max_size=n))))


def test_unit_square_optimum():
    out = lp_optimize(UNIT_SQUARE, (1, 1))
    assert out.status == OPTIMAL
    assert out.vertex.point == (1, 1) and out.objective == 2


def test_diamond_optimum():
    out = lp_optimize(DIAMOND, (1, 0))
    assert out.vertex.point == (1, 0) and out.objective == 1


def test_half_line_unbounded():
    assert lp_optimize(Polyhedron(((-1,),), (0,)), (1,)).status == UNBOUNDED


def test_infeasible():
    assert lp_optimize(EMPTY, (1,)).status == INFEASIBLE


def test_objective_shape_checked():
    with pytest.raises(ShapeError):
        lp_optimize(UNIT_SQUARE, (1, 2, 3))


def test_vertices_examples():
    assert len(enumerate_vertices(UNIT_SQUARE)) == 4
    assert [v.point for v in enumerate_vertices(TRIANGLE)] == [(0, 0), (1, 2), (2, 1)]
    assert enumerate_vertices(EMPTY) == []


def test_tangent_cone_examples():
    cone = tangent_cone(UNIT_SQUARE, (1, 1))
    assert cone.A == ((1, 0), (0, 1)) and cone.b == (1, 1)
    cone = tangent_cone(TRIANGLE, (2, 1))
    assert cone.A == ((1, -2), (1, 1)) and cone.b == (0, 3)
    with pytest.raises(PreconditionError):
        tangent_cone(UNIT_SQUARE, (Fraction(1, 2), 1))


def test_is_polytope_examples():
    assert is_polytope(UNIT_SQUARE)
    assert not is_polytope(Polyhedron(((1, 0),), (0,)))
    assert not is_polytope(EMPTY)


def test_lexicographic_tie_break():
    # c = (0, 1) is optimal along the whole top edge of the unit square
    assert lp_optimize(UNIT_SQUARE, (0, 1)).vertex.point == (0, 1)


@given(polyhedra())
def test_lp_matches_vertex_maximum(data):
    A, b, c = data
    assume(rank(A) == len(A[0]))
    P = Polyhedron(A, b)
    verts = enumerate_vertices(P)
    out = lp_optimize(P, c)
    if out.status == OPTIMAL and verts:
        assert out.objective == max(dot(c, v.point) for v in verts)
    if is_polytope(P):
        assert out.status == OPTIMAL
        assert out.objective == max(dot(c, v.point) for v in verts)


@given(polyhedra())
def test_vertex_active_sets_and_certificate(data):
    A, b, c = data
    assume(rank(A) == len(A[0]))
    P = Polyhedron(A, b)
    for v in enumerate_vertices(P):
        assert P.contains(v.point)
        assert all(dot(P.A[i], v.point) == P.b[i] for i in v.active_rows)
        assert set(v.basis) <= set(v.active_rows)
        assert abs(det(submatrix(P.A, v.basis, range(P.n)))) == v.basis_det > 0
    out = lp_optimize(P, c)
    if out.status == OPTIMAL:
        basis = submatrix(P.A, out.vertex.basis, range(P.n))
        inv = inverse_rat(basis)
        lam = tuple(sum(c[r] * inv[r][k] for r in range(P.n)) for k in range(P.n))
        assert lam == out.multipliers
        assert all(v >= 0 for v in lam)
        assert out.objective == dot(c, out.vertex.point)


def test_non_pointed_bounded_objective_is_a_domain_error():
    from subdet.errors import DomainError
    strip = Polyhedron(((1, 0), (-1, 0)), (1, 0))
    assert lp_optimize(strip, (0, 1)).status == UNBOUNDED
    with pytest.raises(DomainError):
        lp_optimize(strip, (1, 0))

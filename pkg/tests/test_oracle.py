from itertools import product

import pytest
from hypothesis import given, strategies as st

from conftest import TRIANGLE, UNIT_SQUARE, cube
from subdet.corner import CornerSystem, build_group_system
from subdet.errors import DomainError, SizeLimitError
from subdet.exact import identity
from subdet.lp import Polyhedron
from subdet.oracle import (Box, bounding_box, brute_group_min, brute_optimize, brute_width,
                           enumerate_lattice_points, feasible_grid, group_hull_vertices,
                           minimal_feasible, vertices)

EMPTY = Polyhedron(((1, 0), (-1, 0), (0, 1), (0, -1)), (0, -1, 1, 0))
POINT = Polyhedron(((1, 0), (-1, 0), (0, 1), (0, -1)), (2, -2, 3, -3))


def test_unit_square_points():
    assert enumerate_lattice_points(UNIT_SQUARE) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_triangle_points_by_direct_check():
    grid = [x for x in product(range(3), repeat=2) if TRIANGLE.contains(x)]
    pts = enumerate_lattice_points(TRIANGLE)
    assert pts == sorted(grid)
    assert (0, 0) in pts and (1, 1) in pts


def test_empty_points():
    assert enumerate_lattice_points(EMPTY) == []
    assert brute_optimize(EMPTY, (1, 1)) is None


def test_brute_optimize_examples():
    assert brute_optimize(UNIT_SQUARE, (1, 1)) == ((1, 1), 2)
    assert brute_optimize(TRIANGLE, (1, 1))[1] == 3
    # ties go to the lexicographically smallest point
    assert brute_optimize(UNIT_SQUARE, (0, 1)) == ((0, 1), 1)


def test_brute_width_examples():
    assert brute_width(cube(3), 2).width == 1
    assert brute_width(TRIANGLE, 3).width == 2
    assert brute_width(POINT, 2).width == 0


def test_unbounded_and_caps():
    with pytest.raises(DomainError):
        enumerate_lattice_points(Polyhedron(((-1, 0), (0, -1)), (0, 0)))
    with pytest.raises(DomainError):
        brute_width(Polyhedron(((-1, 0), (0, -1), (1, 1)), (0, 0, -1)), 2)
    with pytest.raises(SizeLimitError):
        enumerate_lattice_points(Polyhedron(((1, 0), (0, 1), (-1, -1)), (100, 100, 0)), cap=50)


def test_box():
    box, verts = bounding_box(TRIANGLE)
    assert box == Box((0, 0), (2, 2)) and box.size == 9
    tilted = Polyhedron(((2, 0), (-2, 0), (0, 3), (0, -3)), (1, 1, 2, 1))
    box, _ = bounding_box(tilted)
    assert box.lower == (-1, -1) and box.upper == (1, 1)


def test_vertices_independent_of_lp_module():
    assert vertices(TRIANGLE) == [(0, 0), (1, 2), (2, 1)]


def test_group_oracles():
    gs = build_group_system(CornerSystem(((4,),), ((1, 3),), (3,)))
    assert brute_group_min(gs, (1, 1), 4) == ((0, 1), 1)
    gs0 = build_group_system(CornerSystem(((3, 1), (1, 2)), identity(2), (0, 0)))
    assert brute_group_min(gs0, (1, 2), 5) == ((0, 0), 0)
    gs = build_group_system(CornerSystem(((3,),), ((1, 1),), (2,)))
    assert minimal_feasible(gs, 2) == [(0, 2), (1, 1), (2, 0)]
    # (1, 1) is the midpoint of the other two, so it is not a vertex of the hull
    assert group_hull_vertices(gs) == [(0, 2), (2, 0)]
    with pytest.raises(SizeLimitError):
        feasible_grid(gs, 10**4, cap=1000)


@given(st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2), min_size=3, max_size=5),
       st.lists(st.integers(-2, 6), min_size=5, max_size=5), st.randoms(use_true_random=False))
def test_enumeration_order_independent(A, b, rnd):
    b = b[:len(A)]
    P = Polyhedron(A, b)
    try:
        pts = enumerate_lattice_points(P)
    except DomainError:
        return
    rows = list(range(len(A)))
    rnd.shuffle(rows)
    Q = Polyhedron([A[i] for i in rows], [b[i] for i in rows])
    assert enumerate_lattice_points(Q) == pts
    assert pts == sorted(pts)
    box, _ = bounding_box(P)
    if box is not None:
        assert pts == [x for x in box.points() if P.contains(x)]

import random
from itertools import product

import pytest

from conftest import DIAMOND_A, TRIANGLE, UNIT_SQUARE
from subdet.errors import DomainError, ParameterError, ShapeError
from subdet.exact import dot
from subdet.flat import (INFEASIBLE_STATUS, OPTIMUM_FOUND, POINT_FOUND, WIDTH_UNMET,
                         min_basis, round_down_rhs, solve_round_down, solve_simplex_feasible,
                         solve_simplex_optimize)
from subdet.generators import random_simplex
from subdet.lp import Polyhedron, enumerate_vertices
from subdet.oracle import brute_optimize, enumerate_lattice_points


def diamond(b):
    return Polyhedron(DIAMOND_A, b)


def test_round_down_even_diamond():
    rep = solve_round_down(diamond((10, 10, 10, 10)), policy="check")
    assert rep.status == POINT_FOUND
    assert rep.certificate["rounded_b"] == (10, 10, 10, 10)
    assert rep.certificate["threshold"] == 3
    assert rep.certificate["width"] == 20 and rep.certificate["width_hypothesis"] is True
    assert rep.point in {(10, 0), (-10, 0), (0, 10), (0, -10)}


def test_round_down_odd_diamond():
    P = diamond((11, 11, 11, 11))
    rep = solve_round_down(P, witnesses=True)
    assert rep.certificate["rounded_b"] == (10, 10, 10, 10)
    assert rep.point in {(10, 0), (-10, 0), (0, 10), (0, -10)}
    assert P.contains(rep.point)
    assert sorted(rep.certificate["witnesses"]) == [(-10, 0), (0, -10), (0, 10), (10, 0)]


def test_round_down_unit_square():
    rep = solve_round_down(UNIT_SQUARE)
    assert rep.certificate["delta_lcm"] == 1
    assert rep.certificate["rounded_b"] == UNIT_SQUARE.b
    assert rep.point in {(0, 0), (0, 1), (1, 0), (1, 1)}


def test_round_down_rhs_uses_floor_mod():
    assert round_down_rhs((11, -1, 0, 7), 2) == (10, -2, 0, 6)


def test_round_down_errors():
    with pytest.raises(DomainError):
        solve_round_down(Polyhedron(((1, 0), (0, 1)), (0, 0)))
    with pytest.raises(ParameterError):
        solve_round_down(UNIT_SQUARE, policy="sometimes")


def test_round_down_small_polytope_can_fail():
    # width 2 < threshold 3 and rounding empties the polytope
    rep = solve_round_down(diamond((1, 1, 1, 1)), policy="check")
    assert rep.certificate["width_hypothesis"] is False
    assert rep.status in (POINT_FOUND, WIDTH_UNMET)
    rep = solve_round_down(diamond((1, 1, -1, 1)), policy="check")
    assert rep.status == WIDTH_UNMET


def test_simplex_triangle():
    rep = solve_simplex_feasible(TRIANGLE, policy="check")
    assert rep.status == POINT_FOUND
    assert rep.certificate["delta_min"] == 3
    assert rep.certificate["width"] == 2
    assert rep.certificate["width_hypothesis"] is True
    assert rep.certificate["scaled_simplex_inside"]
    assert rep.point in enumerate_lattice_points(TRIANGLE)


def test_simplex_unimodular():
    P = Polyhedron(((-1, 0), (0, -1), (1, 1)), (0, 0, 4))
    rep = solve_simplex_feasible(P)
    assert rep.status == POINT_FOUND and rep.certificate["delta_min"] == 1
    assert rep.point in [v.point for v in enumerate_vertices(P)]


def thin_empty_simplex():
    """Lattice-free triangle (delta = 4), found by scanning small b."""
    for b in product(range(-4, 8), repeat=3):
        P = Polyhedron(((-3, 1), (1, -3), (1, 1)), b)
        if len(enumerate_vertices(P)) == 3 and not enumerate_lattice_points(P):
            return P
    raise AssertionError("no lattice-free triangle in the scanned range")


def test_simplex_thin_reports_unmet():
    P = thin_empty_simplex()
    rep = solve_simplex_feasible(P, policy="check")
    assert rep.status == WIDTH_UNMET
    assert rep.certificate["width_hypothesis"] is False


def test_simplex_shape_errors():
    with pytest.raises(ShapeError):
        solve_simplex_feasible(UNIT_SQUARE)
    with pytest.raises(DomainError):
        solve_simplex_feasible(Polyhedron(TRIANGLE.A, (0, 0, -1)))


def test_min_basis_tie_break():
    assert min_basis(TRIANGLE.A) == ((0, 1), 3)


def test_simplex_optimize_triangle():
    rep = solve_simplex_optimize(TRIANGLE, (1, 1))
    assert rep.status == OPTIMUM_FOUND and rep.objective == 3
    assert rep.point in ((1, 2), (2, 1))
    assert brute_optimize(TRIANGLE, (1, 1))[1] == 3


def test_simplex_optimize_zero_objective():
    rep = solve_simplex_optimize(TRIANGLE, (0, 0))
    assert rep.objective == 0 and TRIANGLE.contains(rep.point)


def test_simplex_optimize_integral_vertex():
    P = Polyhedron(((-1, 0), (0, -1), (1, 1)), (0, 0, 4))
    rep = solve_simplex_optimize(P, (2, 1))
    assert rep.point == (4, 0) and rep.certificate["y"] == (0, 0)


def test_simplex_optimize_infeasible():
    # empty simplex data is rejected before the LP
    with pytest.raises(DomainError):
        solve_simplex_optimize(Polyhedron(TRIANGLE.A, (0, 0, -1)), (1, 0))


def test_random_simplices_agree_with_oracle():
    rng = random.Random(7)
    for _ in range(40):
        P = random_simplex(rng, rng.choice((2, 3)), 3)
        c = tuple(rng.randint(-3, 3) for _ in range(P.n))
        pts = enumerate_lattice_points(P)
        feas = solve_simplex_feasible(P)
        if feas.found:
            assert feas.point in pts
        opt = solve_simplex_optimize(P, c)
        if opt.found:
            assert opt.objective == max(dot(c, x) for x in pts)
        else:
            assert opt.status == WIDTH_UNMET

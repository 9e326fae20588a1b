import random
from fractions import Fraction

import pytest

from conftest import DIAMOND_A, TRIANGLE
from subdet.au import (CEIL, FLOOR, expected_lp_calls, slice_problems, solve_almost_unimodular,
                       solve_k_almost_unimodular)
from subdet.errors import DomainError, PreconditionError, SizeLimitError
from subdet.exact import identity, is_integral
from subdet.flat import INFEASIBLE_STATUS, OPTIMUM_FOUND
from subdet.generators import random_au_matrix, random_rhs
from subdet.lp import Polyhedron, enumerate_vertices, lp_optimize, tangent_cone
from subdet.oracle import brute_optimize


def diamond(b):
    return Polyhedron(DIAMOND_A, b)


def test_integral_relaxation():
    rep = solve_almost_unimodular(diamond((1, 1, 1, 1)), (1, 0))
    assert rep.point == (1, 0) and rep.objective == 1
    assert rep.certificate["lp_calls"] == 1 and rep.certificate["slices"] == []


def test_fractional_relaxation():
    rep = solve_almost_unimodular(diamond((1, 2, 1, 2)), (1, 0))
    cert = rep.certificate
    assert cert["lp_vertex"] == (Fraction(3, 2), Fraction(-1, 2))
    assert rep.objective == 1 and rep.point in ((1, 0), (1, -1))
    assert cert["lp_calls"] == 5 and cert["method"] == "slices"
    by_key = {(s["index_set"], s["kind"]): s for s in cert["slices"]}
    assert by_key[((0,), CEIL)]["status"] == "infeasible"
    assert by_key[((0,), FLOOR)]["objective"] == 1


def test_zero_objective():
    P = diamond((1, 2, 1, 2))
    rep = solve_almost_unimodular(P, (0, 0))
    assert rep.objective == 0 and P.contains(rep.point)


def test_slice_problems_fix_coordinates():
    out = lp_optimize(diamond((1, 2, 1, 2)), (1, 0))
    cone = tangent_cone(diamond((1, 2, 1, 2)), out.vertex)
    slices = slice_problems(cone, out.vertex.point, 1)
    assert [(s.index_set, s.bound_kind, s.fixed_values) for s in slices] == [
        ((0,), CEIL, (2,)), ((0,), FLOOR, (1,)), ((1,), CEIL, (0,)), ((1,), FLOOR, (-1,))]
    assert len(slice_problems(cone, out.vertex.point, 2)) == 2


def test_preconditions():
    with pytest.raises(PreconditionError):
        solve_almost_unimodular(TRIANGLE, (1, 1))
    with pytest.raises(SizeLimitError):
        solve_k_almost_unimodular(Polyhedron(identity(5), (1,) * 5), (1,) * 5, 4)
    with pytest.raises(DomainError):
        solve_almost_unimodular(Polyhedron(identity(2), (1, 1)), (-1, 0))


def test_oracle_fallback_certifies_emptiness():
    P = Polyhedron(((1, 1), (-1, -1), (1, -1), (-1, 1)), (1, 0, 1, 0))
    rep = solve_almost_unimodular(P, (1, 0))
    assert rep.found
    # a lattice-free almost unimodular polytope
    Q = Polyhedron(((1, 1), (-1, -1), (1, -1), (-1, 1)), (1, -1, 0, 0))
    assert brute_optimize(Q, (1, 0)) is None
    rep = solve_almost_unimodular(Q, (1, 0))
    assert rep.status == INFEASIBLE_STATUS
    assert rep.certificate["method"] == "oracle" and rep.certificate["oracle_certified_empty"]
    rep = solve_almost_unimodular(Q, (1, 0), fallback=False)
    assert rep.status == INFEASIBLE_STATUS and rep.certificate["method"] == "exhausted"


def test_expected_lp_calls():
    assert expected_lp_calls(3, 1) == 7
    assert expected_lp_calls(3, 2) == 7
    assert expected_lp_calls(4, 2) == 13


def test_k1_matches_almost_unimodular():
    rng = random.Random(3)
    for _ in range(20):
        P = random_rhs(rng, random_au_matrix(rng, 2, 4))
        c = (rng.randint(-2, 2), rng.randint(-2, 2))
        assert solve_almost_unimodular(P, c) == solve_k_almost_unimodular(P, c, 1)


def test_random_instances_match_oracle_and_slice_structure():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.choice((2, 3))
        P = random_rhs(rng, random_au_matrix(rng, n, n + 2))
        c = tuple(rng.randint(-3, 3) for _ in range(n))
        rep = solve_almost_unimodular(P, c)
        ref = brute_optimize(P, c)
        assert (ref is None) == (not rep.found)
        if ref is not None:
            assert rep.objective == ref[1] and P.contains(rep.point)
        v = rep.certificate.get("lp_vertex")
        if v is not None and not is_integral(v):
            assert rep.certificate["lp_calls"] == 2 * n + 1
            cone = tangent_cone(P, v)
            for sp in slice_problems(cone, v, 1):
                for w in enumerate_vertices(sp.polyhedron()):
                    assert w.point == v or is_integral(w.point)


def test_k2_on_identity_like_matrix():
    A = identity(3) + tuple(tuple(-x for x in r) for r in identity(3)) + ((1, 1, 0),)
    P = Polyhedron(A, (1, 1, 1, 0, 0, 0, 1))
    rep = solve_k_almost_unimodular(P, (1, 1, 1), 2, check=False)
    assert rep.status == OPTIMUM_FOUND
    assert rep.objective == brute_optimize(P, (1, 1, 1))[1]

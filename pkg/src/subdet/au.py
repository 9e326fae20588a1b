"""Integer optimization for (k-)almost unimodular constraint matrices by LP slicing.

If the LP optimum ``v`` is fractional, the integer optimum sits on an edge of
the tangent cone ``N(v)``. Slicing ``N(v)`` with ``x_J = ceil(v_J)`` and with
``x_J = floor(v_J)`` for every ``|J| = k`` produces LPs whose vertices are
either ``v`` itself or integral, and one of them is optimal for the integer
program.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, comb, floor

from .errors import DomainError, PreconditionError, SizeLimitError
from .exact import dot, is_integral
from .flat import INFEASIBLE_STATUS, OPTIMUM_FOUND, SolveReport
from .lp import OPTIMAL, UNBOUNDED, Polyhedron, is_polytope, lp_optimize, tangent_cone
from .oracle import brute_optimize
from .spectrum import is_almost_unimodular, is_k_almost_unimodular

MAX_K = 3
CEIL, FLOOR = "ceil", "floor"


@dataclass(frozen=True)
class SliceProblem:
    base_cone: Polyhedron
    index_set: tuple
    bound_kind: str
    fixed_values: tuple

    def polyhedron(self):
        rows, rhs = [], []
        n = self.base_cone.n
        for j, value in zip(self.index_set, self.fixed_values):
            e = [int(i == j) for i in range(n)]
            rows += [e, [-a for a in e]]
            rhs += [value, -value]
        return self.base_cone.with_rows(rows, rhs)


def slice_problems(cone, v, k):
    """The ``2 * C(n, k)`` slices of ``cone`` around the fractional vertex ``v``."""
    out = []
    for J in combinations(range(cone.n), k):
        for kind, rnd in ((CEIL, ceil), (FLOOR, floor)):
            out.append(SliceProblem(cone, J, kind, tuple(rnd(v[j]) for j in J)))
    return out


def solve_k_almost_unimodular(P, c, k, fallback=True, check=True):
    """``max c.x`` over ``P`` and ``Z^n`` for a k-almost unimodular ``A``.

    The certificate holds the LP vertex, the number of LP calls, and per slice
    its index set, rounding and LP outcome. If no slice produces an integral
    point that is feasible for the original system, the oracle is consulted
    when ``fallback`` is set and ``P`` is a polytope.
    """
    if k > MAX_K:
        raise SizeLimitError(f"k = {k} exceeds the supported maximum {MAX_K}")
    if check and not is_k_almost_unimodular(P.A, k):
        raise PreconditionError(f"matrix is not {k}-almost unimodular")
    out = lp_optimize(P, c)
    lp_calls = 1
    if out.status == UNBOUNDED:
        raise DomainError("LP relaxation is unbounded")
    if out.status != OPTIMAL:
        return SolveReport(INFEASIBLE_STATUS, certificate={"lp_calls": lp_calls,
                                                           "method": "relaxation"})
    v = out.vertex.point
    cert = {"lp_vertex": v, "lp_objective": out.objective, "active_rows": out.vertex.active_rows}
    if is_integral(v):
        x = tuple(int(t) for t in v)
        cert.update(lp_calls=lp_calls, method="relaxation", slices=[])
        return SolveReport(OPTIMUM_FOUND, point=x, objective=Fraction(dot(c, x)), certificate=cert)
    cone = tangent_cone(P, out.vertex)
    best = None
    slices = []
    for sp in slice_problems(cone, v, k):
        res = lp_optimize(sp.polyhedron(), c)
        lp_calls += 1
        entry = {"index_set": sp.index_set, "kind": sp.bound_kind, "fixed": sp.fixed_values,
                 "status": res.status}
        if res.optimal:
            x = res.vertex.point
            entry["point"] = x
            entry["objective"] = res.objective
            if is_integral(x) and P.contains(x):
                x = tuple(int(t) for t in x)
                key = (-res.objective, x)
                if best is None or key < best:
                    best = key
        slices.append(entry)
    cert.update(lp_calls=lp_calls, slices=slices)
    if best is not None:
        cert["method"] = "slices"
        x = best[1]
        return SolveReport(OPTIMUM_FOUND, point=x, objective=Fraction(dot(c, x)), certificate=cert)
    cert["method"] = "exhausted"
    if fallback and is_polytope(P):
        found = brute_optimize(P, c)
        cert["method"] = "oracle"
        if found is None:
            cert["oracle_certified_empty"] = True
            return SolveReport(INFEASIBLE_STATUS, certificate=cert)
        x, value = found
        cert["oracle_certified_empty"] = False
        return SolveReport(OPTIMUM_FOUND, point=x, objective=Fraction(value), certificate=cert)
    return SolveReport(INFEASIBLE_STATUS, certificate=cert)


def solve_almost_unimodular(P, c, fallback=True):
    """Slicing solver with ``k = 1``: ``2n`` slice LPs after the relaxation."""
    if not is_almost_unimodular(P.A):
        raise PreconditionError("matrix is not almost unimodular")
    return solve_k_almost_unimodular(P, c, 1, fallback=fallback, check=False)


def expected_lp_calls(n, k):
    return 1 + 2 * comb(n, k)

"""Flatness-based integer feasibility and optimization.

``solve_round_down``
    For a polytope ``P(A, b)`` round every ``b_i`` down to a multiple of
    ``L = Delta_lcm(A)``. All vertices of ``P(A, b')`` are then integral, and
    ``P(A, b')`` is nonempty whenever ``w(P) > (L - 1) (Delta / Delta_gcd) (n + 1)``.

``solve_simplex_feasible`` / ``solve_simplex_optimize``
    For a simplex ``(n+1) x n`` take a basis ``A_hat`` of the tangent cone at a
    vertex, reduce the corner system ``A_hat x + y = b_hat`` in its group and
    lift back. The lifted point lies in ``v + conv(0, -(Delta - 1) A_hat^{-1})``,
    which is inside ``P`` as soon as ``w(P) >= Delta - 1``.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .corner import CornerSystem, build_group_system, group_optimize, solve_identity_case
from .errors import DomainError, ParameterError, ShapeError
from .exact import det, dot, identity, inverse_rat, is_integral, matvec, submatrix
from .lp import INFEASIBLE, Polyhedron, enumerate_vertices, is_polytope, lp_optimize
from .spectrum import compute_spectrum
from .width import DEFAULT_RADIUS, width_exact

POINT_FOUND = "point_found"
OPTIMUM_FOUND = "optimum_found"
WIDTH_UNMET = "width_precondition_unmet"
INFEASIBLE_STATUS = "infeasible"

POLICIES = ("check", "assume", "opportunistic")


@dataclass
class SolveReport:
    status: str
    point: tuple = None
    objective: Fraction = None
    certificate: dict = field(default_factory=dict)

    @property
    def found(self):
        return self.status in (POINT_FOUND, OPTIMUM_FOUND)


def _check_policy(policy):
    if policy not in POLICIES:
        raise ParameterError(f"policy must be one of {POLICIES}, got {policy!r}")


def _width_check(P, threshold, strict, policy, radius, certificate):
    """Evaluate the width hypothesis according to ``policy``; True / False / None (unknown)."""
    if policy == "assume":
        certificate["width_check"] = "assumed"
        return True
    if policy == "opportunistic":
        certificate["width_check"] = "skipped"
        return None
    res = width_exact(P, radius=radius)
    certificate["width"] = res.width
    certificate["width_direction"] = res.direction
    certificate["width_certified"] = res.certified
    holds = res.width > threshold if strict else res.width >= threshold
    if holds:
        # a radius-limited width is only an upper bound on the true width
        certificate["width_check"] = "holds" if res.certified else "unknown"
        return True if res.certified else None
    certificate["width_check"] = "fails"
    return False


def _as_int_point(x):
    return tuple(int(v) for v in x)


def round_down_rhs(b, lcm):
    return tuple(bi - bi % lcm for bi in b)


def solve_round_down(P, policy="opportunistic", radius=DEFAULT_RADIUS, witnesses=False):
    """Integer point of a wide polytope from a vertex of ``P(A, b')``.

    The certificate records the spectrum, the rounded right-hand side, the
    width threshold and, with ``witnesses=True``, all (integral) vertices of
    ``P(A, b')``.
    """
    _check_policy(policy)
    if not is_polytope(P):
        raise DomainError("round-down solver needs a nonempty bounded polyhedron")
    spec = compute_spectrum(P.A)
    lcm = spec.delta_lcm
    b_rounded = round_down_rhs(P.b, lcm)
    threshold = (lcm - 1) * Fraction(spec.delta_max, spec.delta_gcd) * (P.n + 1)
    cert = {"delta_max": spec.delta_max, "delta_gcd": spec.delta_gcd, "delta_lcm": lcm,
            "rounded_b": b_rounded, "threshold": threshold}
    holds = _width_check(P, threshold, True, policy, radius, cert)
    cert["width_hypothesis"] = holds
    rounded = Polyhedron(P.A, b_rounded)
    out = lp_optimize(rounded, [0] * P.n)
    if out.status == INFEASIBLE:
        cert["reason"] = "rounded polytope is empty"
        return SolveReport(WIDTH_UNMET, certificate=cert)
    x = out.vertex.point
    if not is_integral(x):
        cert["reason"] = "rounded polytope has a fractional vertex"
        return SolveReport(WIDTH_UNMET, certificate=cert)
    x = _as_int_point(x)
    if not P.contains(x):
        raise RuntimeError("vertex of the rounded polytope escaped P")
    cert["basis"] = out.vertex.basis
    if witnesses:
        cert["witnesses"] = [v.point for v in enumerate_vertices(rounded)]
    return SolveReport(POINT_FOUND, point=x, certificate=cert)


def _check_simplex(P):
    if P.m != P.n + 1:
        raise ShapeError(f"a simplex in dimension {P.n} needs {P.n + 1} rows, got {P.m}")
    if not is_polytope(P):
        raise DomainError("simplex solver needs a nonempty bounded polyhedron")
    if len(enumerate_vertices(P)) != P.n + 1:
        raise DomainError("polytope is not a full-dimensional simplex")


def min_basis(A):
    """Row subset of size ``n`` with the smallest nonzero ``|det|`` (lexicographic ties)."""
    n = len(A[0])
    best = None
    for rows in combinations(range(len(A)), n):
        d = abs(det(submatrix(A, rows, range(n))))
        if d and (best is None or d < best[0]):
            best = (d, rows)
    return best[1], best[0]


def _corner_lift(P, rows):
    A_hat = submatrix(P.A, rows, range(P.n))
    b_hat = tuple(P.b[i] for i in rows)
    return A_hat, b_hat


def _scaled_simplex_inside(P, A_hat, b_hat, delta):
    """Vertices of ``v + conv(0, -(delta - 1) A_hat^{-1})`` all satisfy ``A x <= b``."""
    inv = inverse_rat(A_hat)
    v = matvec(inv, b_hat)
    pts = [v] + [tuple(v[i] - (delta - 1) * inv[i][k] for i in range(P.n)) for k in range(P.n)]
    return all(P.contains(p) for p in pts)


def solve_simplex_feasible(P, policy="opportunistic", radius=DEFAULT_RADIUS):
    """Integer point of a simplex whose width is at least ``delta(A) - 1``."""
    _check_policy(policy)
    _check_simplex(P)
    rows, delta = min_basis(P.A)
    A_hat, b_hat = _corner_lift(P, rows)
    cert = {"basis": rows, "delta_min": delta}
    holds = _width_check(P, delta - 1, False, policy, radius, cert)
    cert["width_hypothesis"] = holds
    if delta == 1:
        x = _as_int_point(matvec(inverse_rat(A_hat), b_hat))
        cert["y"] = (0,) * P.n
        return SolveReport(POINT_FOUND, point=x, certificate=cert)
    sol = solve_identity_case(A_hat, b_hat)
    x = _as_int_point(sol.lifted_x)
    cert["y"] = sol.y
    cert["scaled_simplex_inside"] = _scaled_simplex_inside(P, A_hat, b_hat, delta)
    if not P.contains(x):
        cert["reason"] = "lifted point violates the remaining facet"
        return SolveReport(WIDTH_UNMET, certificate=cert)
    return SolveReport(POINT_FOUND, point=x, certificate=cert)


def solve_simplex_optimize(P, c, policy="opportunistic", radius=DEFAULT_RADIUS):
    """``max c.x`` over the integer points of a simplex via group minimization.

    At the LP-optimal vertex with basis ``A_hat`` the objective becomes
    ``c.x = c.v - lambda.y`` with ``lambda = c^T A_hat^{-1} >= 0``; the group DP
    minimizes ``lambda.y``. The lift is optimal over the whole tangent cone, so
    it is optimal for ``P`` whenever it lies in ``P``.
    """
    _check_policy(policy)
    _check_simplex(P)
    out = lp_optimize(P, c)
    if not out.optimal:
        return SolveReport(INFEASIBLE_STATUS, certificate={"lp_status": out.status})
    rows = out.vertex.basis
    A_hat, b_hat = _corner_lift(P, rows)
    delta = out.vertex.basis_det
    lam = out.multipliers
    cert = {"basis": rows, "delta": delta, "lp_vertex": out.vertex.point,
            "lp_objective": out.objective, "multipliers": lam}
    holds = _width_check(P, delta - 1, False, policy, radius, cert)
    cert["width_hypothesis"] = holds
    gs = build_group_system(CornerSystem(A_hat, identity(P.n), b_hat))
    sol = group_optimize(gs, lam)
    x = _as_int_point(sol.lifted_x)
    cert["y"] = sol.y
    cert["dp_stats"] = sol.stats
    cert["group_order"] = gs.order
    if not P.contains(x):
        cert["reason"] = "group optimum lies outside the simplex"
        return SolveReport(WIDTH_UNMET, certificate=cert)
    return SolveReport(OPTIMUM_FOUND, point=x, objective=Fraction(dot(c, x)), certificate=cert)

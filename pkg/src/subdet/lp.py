"""Exact rational linear programming over ``{x : A x <= b}``.

The solver is a primal simplex that walks vertices of the polyhedron directly:
a basis is a set of ``n`` linearly independent tight rows, the multipliers are
``lambda = c^T A_B^{-1}`` and Bland's rule (smallest row index) is used for both
the leaving and the entering row. Phase one runs the same walk on the auxiliary
system ``A x - t <= b, t >= 0``.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import DomainError, PreconditionError, ShapeError
from .exact import (as_int_matrix, as_int_vector, det, dot, inverse_rat, nullspace_rat,
                    rank, shape, solve_rat, submatrix)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

_BASIS_SEARCH_CAP = 5000


@dataclass(frozen=True)
class Polyhedron:
    """``P(A, b) = {x : A x <= b}`` with integer data."""

    A: tuple
    b: tuple

    def __post_init__(self):
        A = as_int_matrix(self.A)
        b = as_int_vector(self.b)
        if len(b) != len(A):
            raise ShapeError(f"A has {len(A)} rows but b has {len(b)} entries")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)

    @property
    def m(self):
        return len(self.A)

    @property
    def n(self):
        return len(self.A[0])

    def slacks(self, x):
        return tuple(bi - dot(row, x) for row, bi in zip(self.A, self.b))

    def contains(self, x):
        return all(s >= 0 for s in self.slacks(x))

    def active_rows(self, x):
        return tuple(i for i, s in enumerate(self.slacks(x)) if s == 0)

    def with_rows(self, rows, rhs):
        return Polyhedron(self.A + tuple(map(tuple, rows)), self.b + tuple(rhs))


@dataclass(frozen=True)
class VertexSolution:
    point: tuple
    active_rows: tuple
    basis: tuple
    basis_det: int


@dataclass(frozen=True)
class LpOutcome:
    status: str
    vertex: VertexSolution = None
    objective: Fraction = None
    multipliers: tuple = field(default=None, compare=False)

    @property
    def optimal(self):
        return self.status == OPTIMAL


# --- engine -----------------------------------------------------------------
# Internal routines work on raw row lists with rational right-hand sides.

def _slack(A, b, x, i):
    return b[i] - dot(A[i], x)


def _independent_subset(A, rows):
    """Greedy maximal linearly independent subset of ``rows`` (in the given order)."""
    chosen = []
    echelon = []  # (pivot column, normalized row)
    for i in rows:
        v = [Fraction(a) for a in A[i]]
        for col, e in echelon:
            if v[col]:
                f = v[col]
                v = [a - f * c for a, c in zip(v, e)]
        col = next((j for j, a in enumerate(v) if a), None)
        if col is None:
            continue
        p = v[col]
        echelon.append((col, [a / p for a in v]))
        chosen.append(i)
    return chosen


def _purify(A, b, x):
    """Move a feasible point to a vertex without leaving the polyhedron.

    Returns ``(vertex, basis_rows)``; raises DomainError if ``A`` has a lineality space.
    """
    n = len(A[0])
    x = list(x)
    while True:
        tight = [i for i in range(len(A)) if _slack(A, b, x, i) == 0]
        basis = _independent_subset(A, tight)
        if len(basis) == n:
            return tuple(x), basis
        if basis:
            d = nullspace_rat([A[i] for i in basis])[0]
        else:
            d = tuple(Fraction(int(j == 0)) for j in range(n))
        Ad = [dot(row, d) for row in A]
        if not any(a > 0 for a in Ad):
            d = tuple(-a for a in d)
            Ad = [-a for a in Ad]
        if not any(a > 0 for a in Ad):
            raise DomainError("polyhedron is not pointed")
        t = min(_slack(A, b, x, i) / Ad[i] for i in range(len(A)) if Ad[i] > 0)
        x = [xi + t * di for xi, di in zip(x, d)]


def _simplex(A, b, c, basis):
    """Bland-rule vertex simplex from a feasible basis. Returns (status, x, basis, lam)."""
    basis = list(basis)
    n = len(A[0])
    m = len(A)
    Binv = [list(row) for row in inverse_rat([A[i] for i in basis])]
    while True:
        x = tuple(sum(Binv[r][k] * b[basis[k]] for k in range(n)) for r in range(n))
        lam = [sum(c[r] * Binv[r][k] for r in range(n)) for k in range(n)]
        negative = [(basis[k], k) for k in range(n) if lam[k] < 0]
        if not negative:
            return OPTIMAL, x, basis, lam
        _, p = min(negative)
        d = tuple(-Binv[r][p] for r in range(n))
        in_basis = set(basis)
        best = None
        for i in range(m):
            if i in in_basis:
                continue
            ad = dot(A[i], d)
            if ad > 0:
                ratio = _slack(A, b, x, i) / ad
                if best is None or ratio < best[0]:
                    best = (ratio, i)
        if best is None:
            return UNBOUNDED, x, basis, lam
        entering = best[1]
        basis[p] = entering
        # rank-one update of the inverse for the replaced row p
        w = [sum(A[entering][r] * Binv[r][k] for r in range(n)) for k in range(n)]
        u = [Binv[r][p] for r in range(n)]
        wp = w[p]
        for k in range(n):
            if k == p:
                for r in range(n):
                    Binv[r][p] = u[r] / wp
            elif w[k]:
                f = w[k] / wp
                for r in range(n):
                    Binv[r][k] -= u[r] * f


def _find_vertex(A, b):
    """Phase one. Returns ``(x, basis)`` for some vertex, or None if infeasible."""
    n = len(A[0])
    t0 = max([Fraction(0)] + [-Fraction(bi) for bi in b])
    Aaux = [list(row) + [-1] for row in A] + [[0] * n + [-1]]
    baux = list(b) + [0]
    caux = [0] * n + [-1]
    start, basis = _purify(Aaux, baux, [Fraction(0)] * n + [t0])
    status, xaux, basis, _ = _simplex(Aaux, baux, caux, basis)
    # phase one is bounded above by 0
    if xaux[-1] > 0:
        return None
    x = xaux[:-1]
    return _purify(A, b, x)


def _maximize(A, b, c, start=None):
    """Raw LP ``max c.x`` over ``A x <= b`` for a pointed polyhedron."""
    if start is None:
        found = _find_vertex(A, b)
        if found is None:
            return INFEASIBLE, None, None, None
        x0, basis = found
    else:
        x0, basis = _purify(A, b, start)
    return _simplex(A, b, c, basis)


def _lexmin_optimal(A, b, c, x, z):
    """Lexicographically smallest point of the optimal face, if every stage is bounded."""
    n = len(A[0])
    rows = [list(r) for r in A] + [list(c), [-a for a in c]]
    rhs = list(b) + [z, -z]
    for k in range(n):
        e = [0] * n
        e[k] = -1
        status, xk, _, _ = _maximize(rows, rhs, e, start=x)
        if status != OPTIMAL:
            return None
        x = xk
        unit = [int(j == k) for j in range(n)]
        rows += [unit, [-a for a in unit]]
        rhs += [x[k], -x[k]]
    return x


def _certificate_basis(A, b, c, x, fallback):
    """Lexicographically least nonsingular basis with ``lambda >= 0`` at vertex ``x``."""
    n = len(A[0])
    tight = [i for i in range(len(A)) if _slack(A, b, x, i) == 0]
    if len(tight) == n:
        return tuple(tight)
    for count, rows in enumerate(combinations(tight, n)):
        if count > _BASIS_SEARCH_CAP:
            break
        sub = [A[i] for i in rows]
        if det(sub) == 0:
            continue
        lam = solve_rat([list(col) for col in zip(*sub)], c)
        if all(v >= 0 for v in lam):
            return rows
    return tuple(sorted(fallback))


def _vertex_solution(P, x, basis):
    return VertexSolution(point=tuple(Fraction(v) for v in x),
                          active_rows=P.active_rows(x),
                          basis=tuple(basis),
                          basis_det=abs(det(submatrix(P.A, basis, range(P.n)))))


def _polyhedron_rank_deficient_status(P, c):
    # restrict to the orthogonal complement of the lineality space
    lin = nullspace_rat(P.A)
    extra = []
    for d in lin:
        d = [Fraction(v) for v in d]
        extra += [d, [-v for v in d]]
    rows = [list(r) for r in P.A] + extra
    rhs = list(P.b) + [0] * len(extra)
    if _find_vertex(rows, rhs) is None:
        return LpOutcome(INFEASIBLE)
    if any(dot(c, d) != 0 for d in lin):
        return LpOutcome(UNBOUNDED)
    raise DomainError("optimum exists but the polyhedron has no vertex")


def lp_optimize(P, c, start=None):
    """Maximize ``c^T x`` over ``P`` exactly.

    Parameters
    ----------
    P : Polyhedron
    c : sequence of int (or Fraction)
    start : VertexSolution or point, optional
        A feasible point of ``P``; skips phase one.

    Returns
    -------
    LpOutcome
        When optimal, ``vertex`` carries the full active set and the
        lexicographically least basis whose multipliers are nonnegative;
        ``multipliers`` is ``c^T A_basis^{-1}``. Among several optimal vertices
        the lexicographically smallest is reported whenever the optimal face is
        bounded.
    """
    c = tuple(Fraction(v) for v in c)
    if len(c) != P.n:
        raise ShapeError(f"objective has {len(c)} entries, polyhedron has {P.n} variables")
    if rank(P.A) < P.n:
        return _polyhedron_rank_deficient_status(P, c)
    A, b = P.A, P.b
    if isinstance(start, VertexSolution):
        start = start.point
    status, x, basis, lam = _maximize(A, b, c, start=start)
    if status != OPTIMAL:
        return LpOutcome(status)
    if any(v == 0 for v in lam):
        z = dot(c, x)
        better = _lexmin_optimal(A, b, c, x, z)
        if better is not None and rank(submatrix(A, P.active_rows(better), range(P.n))) == P.n:
            x = better
            _, _, basis, _ = _maximize(A, b, c, start=x)
    basis = _certificate_basis(A, b, c, x, basis)
    sub = submatrix(A, basis, range(P.n))
    lam = solve_rat([list(col) for col in zip(*sub)], c)
    vertex = _vertex_solution(P, x, basis)
    return LpOutcome(OPTIMAL, vertex=vertex, objective=dot(c, x), multipliers=tuple(lam))


def enumerate_vertices(P):
    """All vertices of ``P`` sorted lexicographically, each with its active set.

    The reported basis of a vertex is its lexicographically least nonsingular
    ``n``-subset of active rows.
    """
    n = P.n
    if P.m < n:
        return []
    found = {}
    for rows in combinations(range(P.m), n):
        sub = submatrix(P.A, rows, range(n))
        d = det(sub)
        if d == 0:
            continue
        x = solve_rat(sub, [P.b[i] for i in rows])
        if x in found or not P.contains(x):
            continue
        found[x] = VertexSolution(point=x, active_rows=P.active_rows(x), basis=rows,
                                  basis_det=abs(d))
    return [found[x] for x in sorted(found)]


def is_vertex(P, x):
    if not P.contains(x):
        return False
    J = P.active_rows(x)
    return bool(J) and rank(submatrix(P.A, J, range(P.n))) == P.n


def tangent_cone(P, v):
    """The shifted cone ``N(v)``: only the rows of ``P`` tight at the vertex ``v``."""
    x = v.point if isinstance(v, VertexSolution) else tuple(Fraction(t) for t in v)
    if not is_vertex(P, x):
        raise PreconditionError(f"{x} is not a vertex of the polyhedron")
    J = P.active_rows(x)
    return Polyhedron([P.A[i] for i in J], [P.b[i] for i in J])


def is_nonempty(P):
    return lp_feasible_point(P) is not None


def lp_feasible_point(P):
    """Some vertex of a pointed ``P`` (rational point), or None if empty."""
    if rank(P.A) < P.n:
        raise DomainError("feasibility search needs a pointed polyhedron")
    found = _find_vertex(P.A, P.b)
    return None if found is None else found[0]


def is_polytope(P):
    """True iff ``P`` is nonempty and bounded (LP in both directions of every axis)."""
    if rank(P.A) < P.n:
        return False
    start = lp_feasible_point(P)
    if start is None:
        return False
    for k in range(P.n):
        for s in (1, -1):
            e = [0] * P.n
            e[k] = s
            status, _, _, _ = _maximize(P.A, P.b, e, start=start)
            if status != OPTIMAL:
                return False
    return True


def lp_value(P, c, start=None):
    """``(status, objective, point)`` of ``max c.x`` without tie-breaking or certificates.

    ``P`` must be pointed. The point is some optimal vertex; this is the cheap
    path used when only the optimal value matters.
    """
    if isinstance(start, VertexSolution):
        start = start.point
    status, x, _, _ = _maximize(P.A, P.b, tuple(Fraction(v) for v in c), start=start)
    if status != OPTIMAL:
        return status, None, None
    return status, dot(c, x), tuple(x)


def support_width(P, d, start=None):
    """``max d.x - min d.x`` over ``P`` with the attaining points."""
    hi = lp_optimize(P, d, start=start)
    lo = lp_optimize(P, [-v for v in d], start=start)
    if not (hi.optimal and lo.optimal):
        raise DomainError("support function is unbounded or the polyhedron is empty")
    return hi.objective + lo.objective, hi.vertex.point, lo.vertex.point

"""Brute-force ground truth.

Nothing here reuses the elimination, LP or width code it is meant to check:
vertices come from a private Gauss-Jordan solver over all ``n``-row subsets,
widths are support values over those vertices, and group feasibility is
decided by integrality of ``A_hat^{-1}(b - B y)`` rather than by the Smith form.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import ceil, floor, gcd, prod

import numpy as np

from .errors import DomainError, SizeLimitError

DEFAULT_CAP = 10**7


@dataclass(frozen=True)
class Box:
    lower: tuple
    upper: tuple

    @property
    def size(self):
        return prod(max(0, u - l + 1) for l, u in zip(self.lower, self.upper))

    def points(self):
        return product(*(range(l, u + 1) for l, u in zip(self.lower, self.upper)))


def _gauss(M, rhs):
    """Solve a square rational system; None if singular."""
    n = len(M)
    T = [[Fraction(a) for a in row] + [Fraction(r)] for row, r in zip(M, rhs)]
    for c in range(n):
        p = next((r for r in range(c, n) if T[r][c] != 0), None)
        if p is None:
            return None
        T[c], T[p] = T[p], T[c]
        piv = T[c][c]
        T[c] = [a / piv for a in T[c]]
        for r in range(n):
            if r != c and T[r][c] != 0:
                f = T[r][c]
                T[r] = [a - f * b for a, b in zip(T[r], T[c])]
    return tuple(T[r][n] for r in range(n))


def _row_rank(M):
    T = [[Fraction(a) for a in row] for row in M]
    rk = 0
    cols = len(T[0]) if T else 0
    for c in range(cols):
        p = next((r for r in range(rk, len(T)) if T[r][c] != 0), None)
        if p is None:
            continue
        T[rk], T[p] = T[p], T[rk]
        for r in range(rk + 1, len(T)):
            f = T[r][c] / T[rk][c]
            T[r] = [a - f * b for a, b in zip(T[r], T[rk])]
        rk += 1
    return rk


def _kernel_vector(M, n):
    """A nonzero kernel vector of a rank ``n - 1`` matrix with ``n`` columns."""
    for j in range(n):
        # fix x_j = 1 and solve for the other coordinates on an independent row set
        others = [k for k in range(n) if k != j]
        for rows in combinations(range(len(M)), n - 1):
            sub = [[M[r][k] for k in others] for r in rows]
            sol = _gauss(sub, [-M[r][j] for r in rows])
            if sol is None:
                continue
            x = list(sol)
            x.insert(j, Fraction(1))
            if all(sum(a * b for a, b in zip(row, x)) == 0 for row in M):
                return tuple(x)
    return None


def _feasible(A, b, x):
    return all(sum(a * t for a, t in zip(row, x)) <= bi for row, bi in zip(A, b))


def vertices(P):
    """All vertices of ``P`` (lexicographically sorted rational tuples)."""
    A, b = P.A, P.b
    n = len(A[0])
    out = set()
    for rows in combinations(range(len(A)), n):
        x = _gauss([A[i] for i in rows], [b[i] for i in rows])
        if x is not None and _feasible(A, b, x):
            out.add(x)
    return sorted(out)


def _check_polytope(P):
    A = P.A
    n = len(A[0])
    if _row_rank(A) < n:
        raise DomainError("oracle needs a pointed polyhedron")
    verts = vertices(P)
    if not verts:
        return verts
    # an extreme ray of {d : A d <= 0} makes P unbounded
    for rows in combinations(range(len(A)), n - 1):
        sub = [A[i] for i in rows]
        if n > 1 and _row_rank(sub) != n - 1:
            continue
        d = _kernel_vector(sub, n) if n > 1 else (Fraction(1),)
        for s in (1, -1):
            ds = [s * t for t in d]
            if all(sum(a * t for a, t in zip(row, ds)) <= 0 for row in A):
                raise DomainError("polyhedron is unbounded")
    return verts


def bounding_box(P):
    verts = _check_polytope(P)
    if not verts:
        return None, verts
    n = len(P.A[0])
    lower = tuple(floor(min(v[i] for v in verts)) for i in range(n))
    upper = tuple(ceil(max(v[i] for v in verts)) for i in range(n))
    return Box(lower, upper), verts


def enumerate_lattice_points(P, cap=DEFAULT_CAP, limit=None):
    """All integer points of the polytope ``P`` in lexicographic order.

    With ``limit`` the scan stops after that many points; the cap then bounds
    each slice ``x_1 = const`` of the box instead of the whole box.
    """
    box, _ = bounding_box(P)
    if box is None:
        return []
    tail_size = prod(u - l + 1 for l, u in zip(box.lower[1:], box.upper[1:]))
    checked = tail_size if limit is not None else box.size
    if checked > cap:
        raise SizeLimitError(f"bounding box has {checked} points, cap is {cap}")
    A = np.array(P.A, dtype=np.int64)
    b = np.array(P.b, dtype=np.int64)
    n = len(box.lower)
    tail = [np.arange(l, u + 1, dtype=np.int64) for l, u in zip(box.lower[1:], box.upper[1:])]
    if tail:
        grid = np.stack(np.meshgrid(*tail, indexing="ij"), axis=-1).reshape(-1, n - 1)
    else:
        grid = np.zeros((1, 0), dtype=np.int64)
    pts = []
    for x0 in range(box.lower[0], box.upper[0] + 1):
        X = np.hstack([np.full((len(grid), 1), x0, dtype=np.int64), grid])
        ok = np.all(X @ A.T <= b, axis=1)
        pts.extend(tuple(int(v) for v in row) for row in X[ok])
        if limit is not None and len(pts) >= limit:
            return pts[:limit]
    return pts


def brute_optimize(P, c, cap=DEFAULT_CAP):
    """``(point, value)`` maximizing ``c.x`` over ``P`` and ``Z^n``; ties go to the
    lexicographically smallest point. None if there is no integer point."""
    best = None
    for x in enumerate_lattice_points(P, cap):
        value = sum(a * t for a, t in zip(c, x))
        if best is None or value > best[1]:
            best = (x, value)
    return best


def _canonical(d):
    g = 0
    for v in d:
        g = gcd(g, v)
    d = tuple(v // g for v in d)
    first = next(v for v in d if v)
    return d if first > 0 else tuple(-v for v in d)


def brute_width(P, radius):
    """Minimum vertex spread over primitive directions with ``|d|_inf <= radius``.

    Returns a :class:`subdet.width.WidthResult` (imported lazily so that the
    oracle itself never executes width-module code).
    """
    from .width import WidthResult

    verts = _check_polytope(P)
    if not verts:
        raise DomainError("polyhedron is empty")
    n = len(P.A[0])
    best = None
    for d in product(range(-radius, radius + 1), repeat=n):
        if not any(d) or _canonical(d) != d:
            continue
        vals = [sum(a * t for a, t in zip(d, v)) for v in verts]
        hi, lo = max(vals), min(vals)
        key = (hi - lo, d)
        if best is None or key < best[0]:
            best = (key, verts[vals.index(hi)], verts[vals.index(lo)])
    (w, d), hi, lo = best
    return WidthResult(Fraction(w), d, hi, lo, certified=False, radius=radius)


def _integrality_test(cs):
    """Integer matrix ``N`` and modulus ``L`` with ``x`` integral iff ``N r = 0 (mod L)``."""
    n = cs.n
    inv = []
    for j in range(n):
        e = [int(i == j) for i in range(n)]
        inv.append(_gauss(cs.A_hat, e))
    inv = [[inv[j][i] for j in range(n)] for i in range(n)]
    L = 1
    for row in inv:
        for v in row:
            L = L * v.denominator // gcd(L, v.denominator)
    N = [[int(v * L) for v in row] for row in inv]
    return N, L


def feasible_grid(gs, bound, cap=DEFAULT_CAP):
    """Array of all ``y`` in ``[0, bound]^s`` satisfying the system, via lift integrality."""
    cs = gs.corner
    s = cs.s
    size = (bound + 1) ** s
    if size > cap:
        raise SizeLimitError(f"search space {size} exceeds cap {cap}")
    N, L = _integrality_test(cs)
    N = np.array(N, dtype=np.int64)
    B = np.array(cs.B, dtype=np.int64)
    b = np.array(cs.b, dtype=np.int64)
    axes = [np.arange(bound + 1, dtype=np.int64)] * s
    Y = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, s)
    R = b[None, :] - Y @ B.T
    ok = np.all((R @ N.T) % L == 0, axis=1)
    return Y[ok]


def brute_group_min(gs, cost, bound, cap=DEFAULT_CAP):
    """Exhaustive minimum of ``cost . y`` over feasible ``y`` in ``[0, bound]^s``.

    Returns ``(y, value)`` with the lexicographically smallest minimizer, or None.
    """
    cost = [Fraction(c) for c in cost]
    den = 1
    for c in cost:
        den = den * c.denominator // gcd(den, c.denominator)
    weights = np.array([int(c * den) for c in cost], dtype=object)
    Y = feasible_grid(gs, bound, cap)
    if len(Y) == 0:
        return None
    values = Y.astype(object) @ weights
    best = min(values)
    y = min(tuple(int(v) for v in row) for row, val in zip(Y, values) if val == best)
    return y, Fraction(best, den)


def minimal_feasible(gs, bound):
    """Feasible ``y`` in ``[0, bound]^s`` with no other feasible point below them."""
    pts = [tuple(int(v) for v in row) for row in feasible_grid(gs, bound)]
    pset = set(pts)
    out = []
    for y in pts:
        below = product(*(range(v + 1) for v in y))
        if not any(u != y and u in pset for u in below):
            out.append(y)
    return sorted(out)


def group_hull_vertices(gs, bound=None):
    """Vertices of ``conv{y >= 0 feasible} + R^s_+`` (the integer hull of the group system).

    Any vertex is minimal and has components below the group order, so only
    the minimal feasible points of ``[0, order - 1]^s`` are candidates; each is
    tested for membership in the hull of the others with an exact LP.
    """
    from .lp import Polyhedron, lp_optimize

    if bound is None:
        bound = gs.order - 1
    cand = minimal_feasible(gs, bound)
    out = []
    for y in cand:
        others = [p for p in cand if p != y]
        if not others:
            out.append(y)
            continue
        k, s = len(others), len(y)
        rows = [[-int(i == j) for j in range(k)] for i in range(k)]
        rhs = [0] * k
        rows += [[1] * k, [-1] * k]
        rhs += [1, -1]
        for i in range(s):
            rows.append([p[i] for p in others])
            rhs.append(y[i])
        if not lp_optimize(Polyhedron(rows, rhs), [0] * k).optimal:
            out.append(y)
    return out

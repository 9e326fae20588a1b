"""Lattice width of polytopes, plus the cone minimum and Lipschitz bounds that control it.

The width along an integer direction ``d`` is ``max d.x - min d.x`` over the
polytope, evaluated with two exact LPs. The lattice width is the minimum over
nonzero integer ``d``. Two candidate families are searched:

* every primitive direction with ``max|d_i| <= radius``;
* the dual directions ``A^T y`` where ``(y, z)`` ranges over the extreme rays
  of ``{(y, z) >= 0 : A^T y + A^T z = 0}``.

A proof radius ``R`` is derived from an inscribed simplex of vertices
``v_0..v_n`` with edge matrix ``E``: any ``d`` with width at most ``w`` has
``|d|_inf <= |E^{-1}|_1 * w``. Once the search covers ``R`` the result is
certified to be the exact lattice width.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import floor

from .errors import DomainError, PreconditionError, SizeLimitError
from .exact import as_int_matrix, dot, integer_scaling, inverse_rat, nullspace_rat, primitive, rank
from .lp import (OPTIMAL, Polyhedron, enumerate_vertices, is_polytope, lp_feasible_point,
                 lp_optimize, lp_value)
from .spectrum import compute_spectrum

DEFAULT_RADIUS = 5
DIRECTION_CAP = 10**5
_SIMPLEX_SUBSET_CAP = 2000
_DUAL_SUBSET_CAP = 20000


@dataclass(frozen=True)
class WidthResult:
    width: Fraction
    direction: tuple
    max_point: tuple
    min_point: tuple
    certified: bool = False
    radius: int = 0


def canonical(d):
    """Primitive representative of ``+-d`` whose first nonzero entry is positive."""
    d = primitive(tuple(d))
    for v in d:
        if v:
            return d if v > 0 else tuple(-x for x in d)
    return d


def primitive_directions(n, radius):
    """Canonical primitive directions of ``Z^n`` with ``|d|_inf == radius`` (one shell)."""
    for d in product(range(-radius, radius + 1), repeat=n):
        if max(map(abs, d)) != radius:
            continue
        if canonical(d) == d:
            yield d


def _proof_factor(vertices, n):
    """Smallest ``|E^{-1}|_1`` over inscribed vertex simplices, or None if P is flat."""
    pts = [v.point for v in vertices]
    best = None
    for count, subset in enumerate(combinations(range(len(pts)), n + 1)):
        if count >= _SIMPLEX_SUBSET_CAP:
            break
        base = pts[subset[0]]
        E = [[pts[j][i] - base[i] for j in subset[1:]] for i in range(n)]
        try:
            Einv = inverse_rat(E)
        except Exception:
            continue
        norm = max(sum(abs(Einv[i][j]) for i in range(n)) for j in range(n))
        if best is None or norm < best:
            best = norm
    return best


def _flat_direction(vertices, n):
    """Integer normal of the affine hull of a lower-dimensional polytope."""
    pts = [v.point for v in vertices]
    base = pts[0]
    diffs = [[p[i] - base[i] for i in range(n)] for p in pts[1:]]
    if not diffs:
        return canonical((1,) + (0,) * (n - 1))
    kernel = nullspace_rat(diffs)
    return canonical(integer_scaling(kernel[0]))


def extreme_dependencies(A, cap=_DUAL_SUBSET_CAP):
    """Extreme rays of ``{u >= 0 : A^T u = 0}`` as primitive integer vectors."""
    m, n = len(A), len(A[0])
    r = rank(A)
    rays = set()
    count = 0
    for size in range(2, r + 2):
        for rows in combinations(range(m), size):
            count += 1
            if count > cap:
                raise SizeLimitError(f"more than {cap} row subsets for dual candidates")
            sub = [A[i] for i in rows]
            if rank(sub) != size - 1:
                continue
            kernel = nullspace_rat([list(col) for col in zip(*sub)])
            if len(kernel) != 1:
                continue
            u = integer_scaling(kernel[0])
            if all(v <= 0 for v in u):
                u = tuple(-v for v in u)
            if not all(v > 0 for v in u):
                continue
            full = [0] * m
            for i, v in zip(rows, u):
                full[i] = v
            rays.add(tuple(full))
    return sorted(rays)


def dual_candidates(A):
    """Directions ``A^T y`` for the extreme rays ``(y, z)`` of the width cone.

    Each extreme ray is a minimal positive dependency ``u`` of the rows of ``A``
    split as ``y + z = u`` with disjoint supports.
    """
    A = as_int_matrix(A)
    n = len(A[0])
    out = set()
    for u in extreme_dependencies(A):
        support = [i for i, v in enumerate(u) if v]
        for k in range(1, len(support)):
            for part in combinations(support, k):
                c = tuple(sum(u[i] * A[i][j] for i in part) for j in range(n))
                if any(c):
                    out.add(canonical(c))
    return sorted(out)


def _evaluate(P, d, start):
    s1, hi, x_hi = lp_value(P, d, start=start)
    s2, lo, x_lo = lp_value(P, [-v for v in d], start=start)
    if s1 != OPTIMAL or s2 != OPTIMAL:
        raise DomainError("polytope expected")
    return hi + lo, x_hi, x_lo


def width_exact(P, radius=DEFAULT_RADIUS, dual=True, cap=DIRECTION_CAP):
    """Lattice width of a polytope.

    Parameters
    ----------
    P : Polyhedron
        Must be nonempty and bounded.
    radius : int
        Search all primitive directions with ``|d|_inf <= radius``. The search
        stops early once the proof radius is reached.
    dual : bool
        Also evaluate the dual (cone generator) candidates.

    Returns
    -------
    WidthResult
        ``certified`` is True when the proof radius was covered, i.e. the width
        is exact; otherwise it is exact only within ``radius``.
    """
    if radius < 1:
        raise PreconditionError("radius must be >= 1")
    if not is_polytope(P):
        raise DomainError("lattice width needs a nonempty bounded polyhedron")
    n = P.n
    if (2 * radius + 1) ** n > 2 * cap:
        raise SizeLimitError(f"direction search with radius {radius} exceeds cap {cap}")
    start = lp_feasible_point(P)
    vertices = enumerate_vertices(P)
    factor = _proof_factor(vertices, n)
    if factor is None:
        d = _flat_direction(vertices, n)
        w, hi, lo = _evaluate(P, d, start)
        return WidthResult(Fraction(w), d, hi, lo, certified=True, radius=0)

    best = None

    def consider(d):
        nonlocal best
        w, hi, lo = _evaluate(P, d, start)
        key = (w, d)
        if best is None or key < best[0]:
            best = (key, hi, lo)

    if dual:
        for d in dual_candidates(P.A):
            consider(d)
    searched = 0
    certified = False
    for shell in range(1, radius + 1):
        if best is not None and shell > floor(factor * best[0][0]):
            certified = True
            break
        for d in primitive_directions(n, shell):
            consider(d)
        searched = shell
    else:
        certified = floor(factor * best[0][0]) <= radius
    (w, d), hi, lo = best
    return WidthResult(Fraction(w), d, hi, lo, certified=certified, radius=searched)


def proof_radius(P):
    """Radius that certifies :func:`width_exact` for ``P`` (0 for flat polytopes)."""
    vertices = enumerate_vertices(P)
    factor = _proof_factor(vertices, P.n)
    if factor is None:
        return 0
    w = width_exact(P, radius=1, dual=False).width
    return floor(factor * w)


def _conv_membership(B, x):
    """Is ``x`` in ``conv(0, B_1, ..., B_s)``?"""
    n, s = len(B), len(B[0])
    if n == s:
        try:
            t = inverse_rat(B)
        except Exception:
            t = None
        if t is not None:
            coef = [sum(t[i][j] * x[j] for j in range(n)) for i in range(n)]
            return all(c >= 0 for c in coef) and sum(coef) <= 1
    rows = [[-int(i == j) for j in range(s)] for i in range(s)]
    rhs = [0] * s
    rows.append([1] * s)
    rhs.append(1)
    for i in range(n):
        rows.append(list(B[i]))
        rhs.append(x[i])
        rows.append([-v for v in B[i]])
        rhs.append(-x[i])
    out = lp_optimize(Polyhedron(rows, rhs), [0] * s)
    return out.optimal


def min_over_cone(B, c):
    """Minimize ``c.x`` over the nonzero lattice points of ``cone(B)``.

    The minimizer lies in ``conv(0, B)``, so only that polytope's lattice points
    are scanned. Returns the lexicographically smallest minimizer, or None if
    ``conv(0, B)`` has no nonzero lattice point.
    """
    B = as_int_matrix(B)
    n, s = len(B), len(B[0])
    lo = [min(0, *B[i]) for i in range(n)]
    hi = [max(0, *B[i]) for i in range(n)]
    best = None
    for x in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if not any(x):
            continue
        value = dot(c, x)
        if best is not None and value > best[0]:
            continue
        if _conv_membership(B, x):
            if best is None or (value, x) < best:
                best = (value, x)
    return None if best is None else best[1]


def width_lipschitz_bound(A, b1, b2):
    """``(Delta / Delta_gcd) (n + 1) |b1 - b2|_inf``: how far the widths of ``P(A, b1)``
    and ``P(A, b2)`` can differ."""
    A = as_int_matrix(A)
    for b in (b1, b2):
        if not is_polytope(Polyhedron(A, b)):
            raise DomainError("both right-hand sides must give nonempty polytopes")
    spec = compute_spectrum(A)
    n = len(A[0])
    dist = max(abs(x - y) for x, y in zip(b1, b2))
    return Fraction(spec.delta_max, spec.delta_gcd) * (n + 1) * dist

"""Seeded random instance families used by the tests and the experiment scripts.

Every generator takes a :class:`random.Random` and retries until its output
meets the stated filter, so a seed pins down the whole instance stream.
"""
from itertools import combinations

from .corner import CornerSystem
from .exact import det, integer_scaling, nullspace_rat, rank
from .lp import Polyhedron, enumerate_vertices, is_polytope
from .spectrum import compute_spectrum, is_almost_unimodular

_MAX_TRIES = 10_000


def _retry(make):
    for _ in range(_MAX_TRIES):
        out = make()
        if out is not None:
            return out
    raise RuntimeError("generator filter rejected every candidate")


def random_matrix(rng, m, n, bound):
    return tuple(tuple(rng.randint(-bound, bound) for _ in range(n)) for _ in range(m))


def random_nonsingular(rng, n, bound, max_delta=None):
    """Square matrix with entries in ``[-bound, bound]`` and ``0 < |det| <= max_delta``."""

    def make():
        M = random_matrix(rng, n, n, bound)
        d = abs(det(M))
        if d == 0 or (max_delta is not None and d > max_delta):
            return None
        return M

    return _retry(make)


def random_polytope(rng, n, m, bound, rhs=(-3, 8)):
    """Nonempty bounded ``P(A, b)`` with ``m`` rows and entries in ``[-bound, bound]``."""

    def make():
        A = random_matrix(rng, m, n, bound)
        if rank(A) < n:
            return None
        b = tuple(rng.randint(*rhs) for _ in range(m))
        P = Polyhedron(A, b)
        return P if is_polytope(P) else None

    return _retry(make)


def random_simplex(rng, n, bound, rhs=(0, 12), coord_bound=40):
    """Full-dimensional simplex ``P(A, b)`` with ``A`` of shape ``(n+1) x n``.

    The last row is a negative integer combination of the first ``n``, so the
    rows positively span and any nonempty ``P(A, b)`` is bounded. Simplices with
    a vertex coordinate beyond ``coord_bound`` are rejected to keep brute-force
    checks cheap.
    """

    def make():
        base = random_nonsingular(rng, n, bound)
        mu = [rng.randint(1, 2) for _ in range(n)]
        last = tuple(-sum(mu[i] * base[i][j] for i in range(n)) for j in range(n))
        if max(map(abs, last)) > 2 * bound:
            return None
        A = base + (last,)
        b = tuple(rng.randint(*rhs) for _ in range(n + 1))
        P = Polyhedron(A, b)
        verts = enumerate_vertices(P)
        if len(verts) != n + 1:
            return None
        if any(abs(t) > coord_bound for v in verts for t in v.point):
            return None
        return P

    return _retry(make)


def random_au_matrix(rng, n, m):
    """``m x n`` almost unimodular matrix with ``Delta = 2`` and bounded ``P(A, b)``."""

    def make():
        A = tuple(tuple(rng.choice((-1, 0, 0, 1)) for _ in range(n)) for _ in range(m))
        if rank(A) < n or not bounded_rows(A):
            return None
        if compute_spectrum(A).delta_max != 2 or not is_almost_unimodular(A):
            return None
        return A

    return _retry(make)


def random_rhs(rng, A, rhs=(-2, 4)):
    """Nonempty polytope ``P(A, b)`` for a random ``b`` with entries in ``rhs``."""

    def make():
        P = Polyhedron(A, tuple(rng.randint(*rhs) for _ in range(len(A))))
        return P if is_polytope(P) else None

    return _retry(make)


def random_au_polytope(rng, n, m, rhs=(-2, 4)):
    """Polytope whose constraint matrix is almost unimodular (and has ``Delta = 2``)."""
    return random_rhs(rng, random_au_matrix(rng, n, m), rhs)


def random_corner(rng, n, s, bound, max_delta, col_bound=3, rhs_bound=6):
    """Corner system ``A_hat x + B y = b`` with ``1 < |det A_hat| <= max_delta``."""

    def make():
        A = random_nonsingular(rng, n, bound, max_delta)
        if abs(det(A)) < 2:
            return None
        B = random_matrix(rng, n, s, col_bound)
        b = tuple(rng.randint(-rhs_bound, rhs_bound) for _ in range(n))
        return CornerSystem(A, B, b)

    return _retry(make)


def small_lcm_matrix(rng, n, m, max_lcm, entries=(-2, -1, 0, 0, 1, 1, 2)):
    """Matrix of full column rank with ``Delta_lcm <= max_lcm`` whose rows positively span."""

    def make():
        A = tuple(tuple(rng.choice(entries) for _ in range(n)) for _ in range(m))
        if rank(A) < n or compute_spectrum(A).delta_lcm > max_lcm:
            return None
        return A if bounded_rows(A) else None

    return _retry(make)


def bounded_rows(A):
    """Is ``{d : A d <= 0} = {0}``, i.e. is every nonempty ``P(A, b)`` bounded?

    ``A`` must have full column rank; each rank ``n - 1`` row subset is tested.
    """
    n = len(A[0])
    if n == 1:
        return any(r[0] > 0 for r in A) and any(r[0] < 0 for r in A)
    for rows in combinations(range(len(A)), n - 1):
        kernel = nullspace_rat([A[i] for i in rows])
        if len(kernel) != 1:
            continue
        d = integer_scaling(kernel[0])
        vals = [sum(a * x for a, x in zip(r, d)) for r in A]
        if all(v <= 0 for v in vals) or all(v >= 0 for v in vals):
            return False
    return True


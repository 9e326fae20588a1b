"""Exact integer / rational linear algebra.

Matrices are plain tuples of row tuples. Integers are Python ints (arbitrary
precision) and rationals are :class:`fractions.Fraction`, so nothing here ever
rounds.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import gcd
from numbers import Integral

from .errors import ShapeError, SingularMatrixError

IntMatrix = tuple  # tuple[tuple[int, ...], ...]


def as_int_matrix(M):
    """Validate ``M`` as a non-empty rectangular integer matrix and freeze it."""
    rows = tuple(tuple(_as_int(v) for v in row) for row in M)
    if not rows or not rows[0]:
        raise ShapeError("matrix must have at least one row and one column")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ShapeError("ragged matrix")
    return rows


def as_int_vector(v):
    return tuple(_as_int(x) for x in v)


def _as_int(x):
    if isinstance(x, Integral):
        return int(x)
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    raise ShapeError(f"non-integer entry {x!r}")


def shape(M):
    return len(M), len(M[0])


def identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(M):
    return tuple(zip(*M))


def matmul(X, Y):
    Yt = transpose(Y)
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Yt) for row in X)


def matvec(M, v):
    return tuple(sum(a * b for a, b in zip(row, v)) for row in M)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def submatrix(M, rows, cols):
    return tuple(tuple(M[i][j] for j in cols) for i in rows)


def is_integral(v):
    return all(Fraction(x).denominator == 1 for x in v)


def primitive(v):
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def integer_scaling(v):
    """Smallest positive multiple of a rational vector that is integral and primitive."""
    den = 1
    for x in v:
        x = Fraction(x)
        den = den * x.denominator // gcd(den, x.denominator)
    return primitive(tuple(int(Fraction(x) * den) for x in v))


def det(M):
    """Determinant by fraction-free (Bareiss) elimination."""
    M = as_int_matrix(M)
    n, cols = shape(M)
    if n != cols:
        raise ShapeError(f"det of non-square {n}x{cols} matrix")
    A = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1]


def rank(M):
    """Rank over the rationals, by fraction-free elimination with column skipping."""
    M = as_int_matrix(M)
    m, n = shape(M)
    A = [list(r) for r in M]
    r = 0
    prev = 1
    for col in range(n):
        piv = next((i for i in range(r, m) if A[i][col] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][col]
        for i in range(r + 1, m):
            aic = A[i][col]
            for j in range(col + 1, n):
                A[i][j] = (A[i][j] * p - aic * A[r][j]) // prev
            A[i][col] = 0
        prev = p
        r += 1
        if r == m:
            break
    return r


def inverse_rat(M):
    """Exact rational inverse via Gauss-Jordan elimination."""
    M = as_int_matrix(M) if _all_int(M) else tuple(tuple(Fraction(x) for x in r) for r in M)
    n, cols = shape(M)
    if n != cols:
        raise ShapeError(f"inverse of non-square {n}x{cols} matrix")
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for col in range(n):
        piv = next((i for i in range(col, n) if A[i][col] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [x / p for x in A[col]]
        for i in range(n):
            if i != col and A[i][col] != 0:
                f = A[i][col]
                A[i] = [a - f * b for a, b in zip(A[i], A[col])]
    return tuple(tuple(row[n:]) for row in A)


def _all_int(M):
    return all(isinstance(x, Integral) for row in M for x in row)


def solve_rat(M, v):
    """Solve ``M x = v`` for square nonsingular ``M`` (rational entries allowed)."""
    n = len(M)
    if len(v) != n or any(len(r) != n for r in M):
        raise ShapeError("solve_rat needs a square system")
    A = [[Fraction(x) for x in row] + [Fraction(v[i])] for i, row in enumerate(M)]
    for col in range(n):
        piv = next((i for i in range(col, n) if A[i][col] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        if p != 1:
            A[col] = [x / p for x in A[col]]
        for i in range(n):
            if i != col and A[i][col] != 0:
                f = A[i][col]
                A[i] = [a - f * b for a, b in zip(A[i], A[col])]
    return tuple(row[n] for row in A)


def nullspace_rat(M):
    """Basis of the right null space of ``M`` over the rationals (list of tuples)."""
    m, n = len(M), len(M[0])
    A = [[Fraction(x) for x in row] for row in M]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if A[i][col] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][col]
        A[r] = [x / p for x in A[r]]
        for i in range(m):
            if i != r and A[i][col] != 0:
                f = A[i][col]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for fj in free:
        vec = [Fraction(0)] * n
        vec[fj] = Fraction(1)
        for i, pj in enumerate(pivots):
            vec[pj] = -A[i][fj]
        basis.append(tuple(vec))
    return basis


def minors(M, order):
    """Yield ``(rows, cols, value)`` for every ``order x order`` minor of ``M``."""
    m, n = shape(M)
    for rows in combinations(range(m), order):
        sub_rows = [M[i] for i in rows]
        for cols in combinations(range(n), order):
            yield rows, cols, det(tuple(tuple(r[j] for j in cols) for r in sub_rows))


@dataclass(frozen=True)
class SnfDecomposition:
    """Smith normal form ``P @ A @ Q == D`` with unimodular ``P`` and ``Q``."""

    P: IntMatrix
    D: IntMatrix
    Q: IntMatrix

    @property
    def diagonal(self):
        return tuple(self.D[k][k] for k in range(len(self.D)))

    @cached_property
    def P_inv(self):
        return _int_inverse(self.P)

    @cached_property
    def Q_inv(self):
        return _int_inverse(self.Q)


def _int_inverse(U):
    inv = inverse_rat(U)
    return tuple(tuple(int(x) for x in row) for row in inv)


def snf(M):
    """Smith normal form of a square nonsingular integer matrix, with multipliers.

    Returns :class:`SnfDecomposition` with ``P M Q = D``, ``|det P| = |det Q| = 1``,
    positive diagonal and ``D[k][k] | D[k+1][k+1]``. Equivalently
    ``M = P^{-1} D Q^{-1}``.
    """
    M = as_int_matrix(M)
    n, cols = shape(M)
    if n != cols:
        raise ShapeError("snf is only implemented for square matrices")
    if det(M) == 0:
        raise SingularMatrixError("snf needs a nonsingular matrix")
    D = [list(r) for r in M]
    P = [list(r) for r in identity(n)]
    Q = [list(r) for r in identity(n)]

    def add_row(dst, src, f):
        for X in (D, P):
            X[dst] = [a + f * b for a, b in zip(X[dst], X[src])]

    def add_col(dst, src, f):
        for X in (D, Q):
            for row in X:
                row[dst] += f * row[src]

    for t in range(n):
        while True:
            # smallest nonzero entry of the trailing block becomes the pivot
            _, i, j = min((abs(D[i][j]), i, j) for i in range(t, n) for j in range(t, n)
                          if D[i][j] != 0)
            D[t], D[i] = D[i], D[t]
            P[t], P[i] = P[i], P[t]
            for X in (D, Q):
                for row in X:
                    row[t], row[j] = row[j], row[t]
            p = D[t][t]
            clean = True
            for i in range(t + 1, n):
                q = D[i][t] // p
                if q:
                    add_row(i, t, -q)
                if D[i][t]:
                    clean = False
            for j in range(t + 1, n):
                q = D[t][j] // p
                if q:
                    add_col(j, t, -q)
                if D[t][j]:
                    clean = False
            if not clean:
                continue
            bad = next((i for i in range(t + 1, n) for j in range(t + 1, n)
                        if D[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            P[t] = [-x for x in P[t]]
    return SnfDecomposition(
        P=tuple(map(tuple, P)), D=tuple(map(tuple, D)), Q=tuple(map(tuple, Q)))


def lower_hermite_basis(M):
    """Lower-triangular basis (positive diagonal) of the lattice spanned by the columns of ``M``.

    Only unimodular column operations are used, so the columns of the result
    generate the same lattice. ``M`` must be square and nonsingular.
    """
    H = [list(r) for r in M]
    n = len(H)

    def col_axpy(dst, src, f):
        for row in H:
            row[dst] += f * row[src]

    def col_swap(a, b):
        for row in H:
            row[a], row[b] = row[b], row[a]

    for i in range(n):
        for j in range(i + 1, n):
            while H[i][j] != 0:
                if H[i][i] == 0:
                    col_swap(i, j)
                    continue
                col_axpy(i, j, -(H[i][i] // H[i][j]))
                col_swap(i, j)
        if H[i][i] == 0:
            raise SingularMatrixError("columns do not span a full-rank lattice")
        if H[i][i] < 0:
            for row in H:
                row[i] = -row[i]
    return tuple(map(tuple, H))

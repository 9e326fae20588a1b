"""Gomory group relaxation of ``A x + B y = b, x integral, y >= 0 integral``.

With the Smith normal form ``P A Q = D`` the system is equivalent to the
congruence ``P B y = P b (mod D)`` over the finite abelian group
``Z_{D11} x ... x Z_{Dnn}`` of order ``|det A|``; every feasible ``y`` lifts back
to ``x = A^{-1}(b - B y)``.
"""
import heapq
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import prod

from .errors import ParameterError, PreconditionError, ShapeError, SingularMatrixError, SizeLimitError
from .exact import (as_int_matrix, as_int_vector, det, identity, inverse_rat, is_integral,
                    lower_hermite_basis, matmul, matvec, shape, snf)

IRREDUCIBLE_BOX_CAP = 10**6


@dataclass(frozen=True)
class CornerSystem:
    A_hat: tuple
    B: tuple
    b: tuple

    def __post_init__(self):
        A = as_int_matrix(self.A_hat)
        B = as_int_matrix(self.B)
        b = as_int_vector(self.b)
        n, cols = shape(A)
        if n != cols:
            raise ShapeError("A_hat must be square")
        if len(B) != n or len(b) != n:
            raise ShapeError("B and b must have as many rows as A_hat")
        object.__setattr__(self, "A_hat", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "b", b)

    @property
    def n(self):
        return len(self.A_hat)

    @property
    def s(self):
        return len(self.B[0])

    @property
    def delta(self):
        return abs(det(self.A_hat))


@dataclass(frozen=True)
class GroupSystem:
    """Congruence system ``sum_j y_j g_j = target`` in ``Z_{moduli[0]} x ...``."""

    corner: CornerSystem
    snf: object
    moduli: tuple
    reduced_cols: tuple
    target: tuple
    a_inverse: tuple = field(repr=False)

    @property
    def order(self):
        return prod(self.moduli)

    @property
    def s(self):
        return len(self.reduced_cols)

    def zero(self):
        return (0,) * len(self.moduli)

    def add(self, g, h):
        return tuple((a + b) % d for a, b, d in zip(g, h, self.moduli))

    def element(self, y):
        """Group element ``P B y mod D``."""
        acc = [0] * len(self.moduli)
        for yj, g in zip(y, self.reduced_cols):
            if yj:
                for k, gk in enumerate(g):
                    acc[k] += yj * gk
        return tuple(a % d for a, d in zip(acc, self.moduli))

    def is_feasible(self, y):
        return all(v >= 0 for v in y) and self.element(y) == self.target


@dataclass(frozen=True)
class GroupSolution:
    y: tuple
    lifted_x: tuple
    value: Fraction = None
    stats: dict = field(default=None, compare=False)


def build_group_system(cs):
    if cs.delta == 0:
        raise SingularMatrixError("A_hat is singular")
    dec = snf(cs.A_hat)
    moduli = dec.diagonal
    PB = matmul(dec.P, cs.B)
    Pb = matvec(dec.P, cs.b)
    cols = tuple(tuple(PB[k][j] % moduli[k] for k in range(cs.n)) for j in range(cs.s))
    target = tuple(v % d for v, d in zip(Pb, moduli))
    return GroupSystem(corner=cs, snf=dec, moduli=moduli, reduced_cols=cols, target=target,
                       a_inverse=inverse_rat(cs.A_hat))


def lift(gs, cs, y):
    """``A_hat^{-1} (b - B y)``; integral exactly when ``y`` satisfies the congruence."""
    rhs = tuple(bi - sum(Bij * yj for Bij, yj in zip(row, y)) for row, bi in zip(cs.B, cs.b))
    return tuple(sum(a * r for a, r in zip(row, rhs)) for row in gs.a_inverse)


def is_irreducible(gs, y, cap=IRREDUCIBLE_BOX_CAP):
    """True iff all points ``u <= y`` map to pairwise distinct group elements."""
    y = tuple(y)
    if not gs.is_feasible(y):
        raise PreconditionError(f"{y} does not satisfy the group congruence")
    box = prod(v + 1 for v in y)
    if box > cap:
        raise SizeLimitError(f"box of {box} points under y exceeds cap {cap}")
    if box > gs.order:
        return False
    seen = set()
    for u in product(*(range(v + 1) for v in y)):
        g = gs.element(u)
        if g in seen:
            return False
        seen.add(g)
    return True


def _solution(gs, y, value=None, stats=None):
    y = tuple(y)
    return GroupSolution(y=y, lifted_x=lift(gs, gs.corner, y), value=value, stats=stats)


def solve_identity_case(A_hat, b):
    """Feasible ``y`` of ``A_hat x + y = b`` with ``sum(y) <= |det A_hat| - 1``.

    The lattice ``A_hat Z^n = P^{-1} D Z^n`` is given a lower-triangular basis
    ``H`` (diagonal ``h_k`` with ``prod h_k = Delta``); then ``y = b + H t`` is reduced
    one coordinate at a time so that ``0 <= y_k < h_k``.
    """
    A_hat = as_int_matrix(A_hat)
    n = len(A_hat)
    cs = CornerSystem(A_hat, identity(n), b)
    gs = build_group_system(cs)
    dec = gs.snf
    scaled = tuple(tuple(dec.P_inv[i][j] * dec.D[j][j] for j in range(n)) for i in range(n))
    H = lower_hermite_basis(scaled)
    y = list(cs.b)
    for k in range(n):
        # column k of H only touches coordinates k..n-1
        t = -(y[k] // H[k][k])
        if t:
            for i in range(k, n):
                y[i] += t * H[i][k]
    sol = _solution(gs, y)
    delta = gs.order
    if min(y) < 0 or sum(y) > delta - 1 or not is_integral(sol.lifted_x):
        raise RuntimeError(f"triangular reduction produced an invalid y={y}")
    return sol


def group_feasible(gs):
    """Breadth-first search in the Cayley graph; the path has ``sum(y) <= order - 1``."""
    start = gs.zero()
    parent = {start: None}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        if g == gs.target:
            break
        for j, col in enumerate(gs.reduced_cols):
            h = gs.add(g, col)
            if h not in parent:
                parent[h] = (g, j)
                queue.append(h)
    if gs.target not in parent:
        return None
    return _solution(gs, _walk_back(gs, parent))


def _walk_back(gs, parent):
    y = [0] * gs.s
    g = gs.target
    while parent[g] is not None:
        g, j = parent[g]
        y[j] += 1
    return y


def reachable_elements(gs):
    """All group elements reachable from 0 (the subgroup generated by the columns)."""
    seen = {gs.zero()}
    queue = deque(seen)
    while queue:
        g = queue.popleft()
        for col in gs.reduced_cols:
            h = gs.add(g, col)
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return seen


def group_optimize(gs, cost):
    """Minimize ``cost . y`` subject to the congruence by Dijkstra on the Cayley graph.

    Nodes are the group elements, an arc ``g -> g + g_j`` costs ``cost[j]``. Ties
    are broken by the number of steps, then by the group element, so the result
    is deterministic and its path is simple (``sum(y) <= order - 1``).

    Returns None when the target is unreachable. ``stats`` counts settled nodes
    and relaxed arcs.
    """
    cost = tuple(Fraction(c) for c in cost)
    if len(cost) != gs.s:
        raise ShapeError(f"cost has {len(cost)} entries for {gs.s} columns")
    if any(c < 0 for c in cost):
        raise ParameterError("group minimization needs nonnegative costs")
    start = gs.zero()
    best = {start: (Fraction(0), 0)}
    parent = {start: None}
    heap = [(Fraction(0), 0, start)]
    settled = set()
    arcs = 0
    while heap:
        d, steps, g = heapq.heappop(heap)
        if g in settled:
            continue
        settled.add(g)
        if g == gs.target:
            break
        for j, col in enumerate(gs.reduced_cols):
            arcs += 1
            h = gs.add(g, col)
            key = (d + cost[j], steps + 1)
            if h not in settled and (h not in best or key < best[h]):
                best[h] = key
                parent[h] = (g, j)
                heapq.heappush(heap, (key[0], key[1], h))
    if gs.target not in settled:
        return None
    y = _walk_back(gs, parent)
    stats = {"nodes_settled": len(settled), "arcs_relaxed": arcs,
             "states_touched": len(settled) + arcs}
    return _solution(gs, y, value=best[gs.target][0], stats=stats)

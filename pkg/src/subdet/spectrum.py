"""Subdeterminant spectrum of an integer matrix and the matrix classes built on it."""
from collections import Counter
from dataclasses import dataclass
from math import comb, gcd

from .errors import DegenerateInputError, ParameterError, RankError, SizeLimitError
from .exact import as_int_matrix, minors, rank, shape

DEFAULT_MINOR_CAP = 10**6


@dataclass(frozen=True)
class DetSpectrum:
    """Aggregates of the ``rank x rank`` minors of a matrix.

    ``delta_min``, ``delta_gcd`` and ``delta_lcm`` range over the nonzero minors
    only. ``minor_multiset`` counts absolute values, zeros included.
    """

    rank: int
    delta_max: int
    delta_min: int
    delta_lcm: int
    delta_gcd: int
    minor_multiset: Counter

    @property
    def nonzero_minors(self):
        return sorted(v for v in self.minor_multiset.elements() if v)

    @property
    def is_equimodular(self):
        return self.delta_min == self.delta_max


def _check_cap(M, order, cap):
    m, n = shape(M)
    count = comb(m, order) * comb(n, order)
    if cap is not None and count > cap:
        raise SizeLimitError(f"{count} minors of order {order} exceed cap {cap}")


def compute_spectrum(A, cap=DEFAULT_MINOR_CAP):
    A = as_int_matrix(A)
    r = rank(A)
    if r == 0:
        raise DegenerateInputError("spectrum of the zero matrix is undefined")
    _check_cap(A, r, cap)
    counts = Counter()
    g, l = 0, 1
    for _, _, value in minors(A, r):
        v = abs(value)
        counts[v] += 1
        if v:
            g = gcd(g, v)
            l = l * v // gcd(l, v)
    nonzero = [v for v in counts if v]
    return DetSpectrum(rank=r, delta_max=max(nonzero), delta_min=min(nonzero),
                       delta_lcm=l, delta_gcd=g, minor_multiset=counts)


def is_power_of(x, k):
    """True iff ``|x| == k**e`` for some ``e >= 0``."""
    x = abs(x)
    if x == 0:
        return False
    if k == 1:
        return x == 1
    while x % k == 0:
        x //= k
    return x == 1


def _minors_in(A, order, allowed, cap):
    _check_cap(A, order, cap)
    return all(allowed(v) for _, _, v in minors(A, order))


def is_k_modular(A, k, cap=DEFAULT_MINOR_CAP):
    if k < 1:
        raise ParameterError("k must be >= 1")
    A = as_int_matrix(A)
    r = rank(A)
    if r == 0:
        return True
    return _minors_in(A, r, lambda v: v == 0 or is_power_of(v, k), cap)


def is_totally_k_modular(A, k, cap=DEFAULT_MINOR_CAP):
    if k < 1:
        raise ParameterError("k must be >= 1")
    A = as_int_matrix(A)
    m, n = shape(A)
    return all(_minors_in(A, order, lambda v: v == 0 or is_power_of(v, k), cap)
               for order in range(1, min(m, n) + 1))


def _almost_unimodular(A, drop, cap):
    r = rank(A)
    spec = compute_spectrum(A, cap)
    if spec.delta_max > 2:
        return False
    return _minors_in(A, r - drop, lambda v: v in (-1, 0, 1), cap)


def is_almost_unimodular(A, cap=DEFAULT_MINOR_CAP):
    A = as_int_matrix(A)
    if rank(A) < 2:
        raise RankError("almost unimodularity needs rank >= 2")
    return _almost_unimodular(A, 1, cap)


def is_k_almost_unimodular(A, k, cap=DEFAULT_MINOR_CAP):
    A = as_int_matrix(A)
    r = rank(A)
    if not 1 <= k <= r - 1:
        raise ParameterError(f"k must lie in [1, rank-1] = [1, {r - 1}], got {k}")
    return _almost_unimodular(A, k, cap)

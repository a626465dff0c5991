"""Integer partitions, Young diagrams and the statistics used by the fixed-point sums.

Diagrams are drawn in English notation: row ``i`` (1-based, top to bottom)
holds ``mu[i-1]`` boxes, cells are ``(i, j)`` with ``1 <= j <= mu_i``.
"""

from functools import lru_cache
from math import factorial
from collections import Counter


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (immutable)."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError("parts must be positive: %r" % (parts,))
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be weakly decreasing: %r" % (parts,))
        return super().__new__(cls, parts)

    @property
    def size(self):
        return sum(self)

    def transpose(self):
        return transpose(self)

    def cells(self):
        return [(i + 1, j + 1) for i, r in enumerate(self) for j in range(r)]

    def __repr__(self):
        return "Partition(%s)" % list(self)


EMPTY = Partition()


def _as_partition(mu):
    return mu if isinstance(mu, Partition) else Partition(mu)


@lru_cache(maxsize=None)
def _partitions(n, maxpart):
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n):
    """All partitions of n in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _partitions(n, n)]


def enumerate_multipartitions(N, k):
    """All N-tuples of partitions with total size k.

    Ordered by the composition (k_1, ..., k_N) in decreasing lexicographic
    order, then by the components' own orders.
    """
    if N < 1 or k < 0:
        raise ValueError("need N >= 1 and k >= 0")
    out = []

    def comps(n, parts):
        if parts == 1:
            yield (n,)
            return
        for a in range(n, -1, -1):
            for rest in comps(n - a, parts - 1):
                yield (a,) + rest

    for comp in comps(k, N):
        lists = [enumerate_partitions(c) for c in comp]
        acc = [()]
        for lst in lists:
            acc = [t + (p,) for t in acc for p in lst]
        out.extend(acc)
    return out


@lru_cache(maxsize=4096)
def _transpose(parts):
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


def transpose(mu):
    return Partition(_transpose(tuple(mu)))


def part(mu, i):
    """mu_i with 1-based i, zero beyond the length."""
    return mu[i - 1] if 1 <= i <= len(mu) else 0


def cell_stats(mu, e):
    """(arm, leg, hook) of the cell e = (i, j)."""
    i, j = e
    if not (1 <= i <= len(mu) and 1 <= j <= mu[i - 1]):
        raise ValueError("cell %r is outside the diagram %r" % (e, tuple(mu)))
    mt = _transpose(tuple(mu))
    arm = mu[i - 1] - j
    leg = mt[j - 1] - i
    return arm, leg, arm + leg + 1


def hooks(mu):
    mt = _transpose(tuple(mu))
    return [mu[i] - j + mt[j] - i - 1 for i in range(len(mu)) for j in range(mu[i])]


def kappa(mu):
    """kappa_mu = 2 * sum over cells of (j - i)."""
    return 2 * sum(j - i for i, r in enumerate(mu) for j in range(r))


def kappa_closed(mu):
    """The second closed form |mu| + sum(mu_i^2 - 2 i mu_i)."""
    return sum(mu) + sum(m * m - 2 * (i + 1) * m for i, m in enumerate(mu))


def n_of(mu):
    """n(mu) = sum (i-1) mu_i."""
    return sum(i * m for i, m in enumerate(mu))


def cycle_type_stats(mu):
    """Multiplicities {i: m_i} and z_mu = prod i^m_i m_i!."""
    mult = dict(sorted(Counter(mu).items()))
    z = 1
    for i, m in mult.items():
        z *= i ** m * factorial(m)
    return mult, z


def partition_count(n):
    return len(_partitions(n, n)) if n >= 0 else 0


def to_json(mu):
    return list(mu)


def from_json(obj):
    return Partition(obj)

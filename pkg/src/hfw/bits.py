"""Bitmask vertex sets and colexicographic indexing of r-subsets.

Vertex sets over {0, ..., n-1} are plain Python ints used as bitmasks.
Edge sets of an r-uniform hypergraph are ints as well, one bit per
r-subset, addressed by colex rank: the subset {v1 < v2 < ... < vr} has
rank sum(C(v_i, i)).  The rank of a subset of a prefix {0..m-1} does not
depend on the ambient n, which keeps induced substructures cheap.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

MAX_VERTICES = 128


def mask_of(vertices) -> int:
    """Bitmask for an iterable of vertex indices."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    """Sorted tuple of vertex indices in a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def iter_bits(mask: int):
    """Yield set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def colex_rank(subset) -> int:
    """Colex rank of a strictly increasing vertex tuple."""
    r = 0
    for i, v in enumerate(subset):
        r += comb(v, i + 1)
    return r


def colex_unrank(rank: int, r: int) -> tuple[int, ...]:
    """Inverse of :func:`colex_rank` for subsets of size ``r``."""
    out = []
    for i in range(r, 0, -1):
        # largest v with C(v, i) <= rank
        v = i - 1
        while comb(v + 1, i) <= rank:
            v += 1
        out.append(v)
        rank -= comb(v, i)
    out.reverse()
    return tuple(out)


def colex_subsets(n: int, r: int):
    """All r-subsets of {0..n-1} as tuples, in colex order."""
    if r == 0:
        yield ()
        return
    for m in range(r - 1, n):
        for rest in colex_subsets(m, r - 1):
            yield rest + (m,)


def subset_masks(n: int, r: int) -> list[int]:
    """Bitmasks of all r-subsets of {0..n-1}, indexed by colex rank."""
    return [mask_of(s) for s in colex_subsets(n, r)]


def inner_rank_bits(n: int, r: int) -> list[int]:
    """For every subset mask S of {0..n-1}, the edge-index bitmask of the
    r-subsets contained in S.

    Returned list is indexed by S (0 .. 2^n - 1).  Used by clique counters
    that sweep the full subset lattice of a small vertex set.
    """
    table = [0] * (1 << n)
    for rank, sub in enumerate(colex_subsets(n, r)):
        bit = 1 << rank
        base = mask_of(sub)
        free = [v for v in range(n) if not (base >> v) & 1]
        # add `bit` to every superset of `base`
        for k in range(1 << len(free)):
            s = base
            kk = k
            idx = 0
            while kk:
                if kk & 1:
                    s |= 1 << free[idx]
                kk >>= 1
                idx += 1
            table[s] |= bit
    return table


def pairs_colex(n: int):
    """All pairs {i, j} of {0..n-1} in colex order: sorted by (j, i)."""
    for j in range(1, n):
        for i in range(j):
            yield (i, j)

"""Uniform hypergraphs and maximal clique / anticlique enumeration.

A hypergraph is immutable after construction and hashable, so instances
can be shared freely across workers.  Edge membership is a bit array
indexed by the colex rank of the sorted r-subset.

Enumeration generalizes pivoted Bron-Kerbosch: a partial clique S keeps
the candidate set {v : S + v is a clique}, which is maintainable
incrementally because adding v only constrains r-subsets through v.  The
search is seeded from every (r-1)-subset, and a maximal clique is emitted
only from its colex-least seed, so no global dedup table is needed.  Two
domination rules keep dense instances tractable: a candidate compatible
with everything in sight is added without branching, and an excluded
vertex compatible with everything in sight kills the branch.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .bits import (
    MAX_VERTICES,
    colex_rank,
    colex_subsets,
    iter_bits,
    mask_of,
    popcount,
    vertices_of,
)


@dataclass(frozen=True)
class CliqueReport:
    """Inventory of the maximal cliques of one hypergraph.

    cliques are vertex bitmasks in increasing mask order; per_vertex[v]
    counts the maximal cliques containing v; d is the minimum of those
    counts.
    """

    cliques: tuple[int, ...]
    c: int
    per_vertex: tuple[int, ...]
    d: int

    def clique_vertex_sets(self) -> list[tuple[int, ...]]:
        return [vertices_of(m) for m in self.cliques]


class UniformHypergraph:
    """Order-n, rank-r hypergraph with a colex-indexed edge bit array."""

    __slots__ = ("n", "r", "edge_bits", "_ext", "_hash")

    def __init__(self, n: int, r: int, edge_bits: int = 0):
        if n < 1:
            raise ValueError("order must be at least 1")
        if n > MAX_VERTICES:
            raise ValueError(f"order {n} exceeds the supported maximum {MAX_VERTICES}")
        if r < 2:
            raise ValueError("rank must be at least 2")
        m = comb(n, r)
        if edge_bits < 0 or edge_bits >> m:
            raise ValueError("edge bits out of range for this order and rank")
        self.n = n
        self.r = r
        self.edge_bits = edge_bits
        self._ext = None
        self._hash = None

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, r: int, edges) -> "UniformHypergraph":
        bits = 0
        for e in edges:
            t = tuple(e)
            if len(t) != r or len(set(t)) != r:
                raise ValueError(f"edge {t!r} is not a set of {r} distinct vertices")
            if any(not isinstance(v, int) or v < 0 or v >= n for v in t):
                raise ValueError(f"edge {t!r} has vertices outside 0..{n - 1}")
            bits |= 1 << colex_rank(tuple(sorted(t)))
        return cls(n, r, bits)

    @classmethod
    def complete(cls, n: int, r: int) -> "UniformHypergraph":
        return cls(n, r, (1 << comb(n, r)) - 1)

    @classmethod
    def empty(cls, n: int, r: int) -> "UniformHypergraph":
        return cls(n, r, 0)

    # -- basics ---------------------------------------------------------------

    @property
    def num_edges(self) -> int:
        return popcount(self.edge_bits)

    def has_edge(self, subset) -> bool:
        t = tuple(sorted(subset))
        if len(t) != self.r:
            raise ValueError("subset size must equal the rank")
        return (self.edge_bits >> colex_rank(t)) & 1 == 1

    def edges(self) -> list[tuple[int, ...]]:
        """All edges as sorted tuples, in colex order."""
        return [e for rank, e in enumerate(colex_subsets(self.n, self.r))
                if (self.edge_bits >> rank) & 1]

    def complement(self) -> "UniformHypergraph":
        full = (1 << comb(self.n, self.r)) - 1
        return UniformHypergraph(self.n, self.r, self.edge_bits ^ full)

    def induced(self, vertex_mask: int) -> "UniformHypergraph":
        """Subhypergraph on the vertices of ``vertex_mask``, relabeled to
        0..k-1 preserving order."""
        if vertex_mask <= 0 or vertex_mask >> self.n:
            raise ValueError("vertex set must be a nonempty subset of the vertices")
        keep = vertices_of(vertex_mask)
        relabel = {v: i for i, v in enumerate(keep)}
        k = len(keep)
        if k < self.r:
            return UniformHypergraph(k, self.r, 0)
        bits = 0
        for sub in combinations(keep, self.r):
            if (self.edge_bits >> colex_rank(sub)) & 1:
                bits |= 1 << colex_rank(tuple(relabel[v] for v in sub))
        return UniformHypergraph(k, self.r, bits)

    def relabel(self, perm) -> "UniformHypergraph":
        """Image under a vertex permutation (perm[old] = new)."""
        bits = 0
        for e in self.edges():
            bits |= 1 << colex_rank(tuple(sorted(perm[v] for v in e)))
        return UniformHypergraph(self.n, self.r, bits)

    def __eq__(self, other):
        return (isinstance(other, UniformHypergraph)
                and self.n == other.n and self.r == other.r
                and self.edge_bits == other.edge_bits)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.r, self.edge_bits))
        return self._hash

    def __repr__(self):
        return f"UniformHypergraph(n={self.n}, r={self.r}, edges={self.num_edges})"

    # -- extension table ------------------------------------------------------

    def extension_masks(self) -> list[int]:
        """For each (r-1)-subset T (by colex rank), the bitmask of vertices v
        with T + v an edge."""
        if self._ext is None:
            ext = [0] * comb(self.n, self.r - 1)
            for rank, e in enumerate(colex_subsets(self.n, self.r)):
                if not (self.edge_bits >> rank) & 1:
                    continue
                for i in range(self.r):
                    rest = e[:i] + e[i + 1:]
                    ext[colex_rank(rest)] |= 1 << e[i]
            self._ext = ext
        return self._ext

    # -- json -----------------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {"n": self.n, "r": self.r, "edges": [list(e) for e in self.edges()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "UniformHypergraph":
        try:
            n, r, edges = obj["n"], obj["r"], obj["edges"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"hypergraph object must have n, r, edges: {exc}") from exc
        if not isinstance(n, int) or not isinstance(r, int):
            raise ValueError("n and r must be integers")
        seen = set()
        for e in edges:
            t = tuple(e)
            if list(t) != sorted(set(t)):
                raise ValueError(f"edge {e!r} must be strictly increasing")
            if t in seen:
                raise ValueError(f"duplicate edge {e!r}")
            seen.add(t)
        return cls.from_edges(n, r, edges)

    @classmethod
    def from_json(cls, text: str) -> "UniformHypergraph":
        return cls.from_json_obj(json.loads(text))


def is_clique(h: UniformHypergraph, vertex_mask: int) -> bool:
    """True iff every r-subset of the vertex set is an edge.

    Vacuously true for sets smaller than r.
    """
    if vertex_mask < 0 or vertex_mask >> h.n:
        raise ValueError("vertex set must be a subset of the vertices")
    vs = vertices_of(vertex_mask)
    if len(vs) < h.r:
        return True
    bits = h.edge_bits
    return all((bits >> colex_rank(sub)) & 1 for sub in combinations(vs, h.r))


def _compat_mask(h: UniformHypergraph, ext: list[int], s_list: list[int], v: int) -> int:
    """Vertices u such that every new (r-1)-subset of s_list + [v] that
    contains v extends to u."""
    r = h.r
    if r == 2:
        return ext[v]
    m = -1
    if r == 3:
        for s in s_list:
            a, b = (s, v) if s < v else (v, s)
            m &= ext[a + comb(b, 2)]
            if m == 0:
                return 0
        return m
    for rest in combinations(sorted(s_list), r - 2):
        sub = tuple(sorted(rest + (v,)))
        m &= ext[colex_rank(sub)]
        if m == 0:
            return 0
    return m


def _universal_ok(h, ext, u: int, m_mask: int) -> bool:
    """True iff u forms an edge with every (r-1)-subset of m_mask - {u}."""
    r = h.r
    others = m_mask & ~(1 << u)
    if r == 2:
        return others & ~ext[u] == 0
    if r == 3:
        for a in iter_bits(others):
            lo, hi = (a, u) if a < u else (u, a)
            rest = others & ~(1 << a) & ~((1 << (a + 1)) - 1)
            if rest & ~ext[lo + comb(hi, 2)]:
                return False
        return True
    vs = vertices_of(others)
    if len(vs) < r - 1:
        return True
    return all((h.edge_bits >> colex_rank(tuple(sorted(sub + (u,))))) & 1
               for sub in combinations(vs, r - 1))


def enumerate_maximal_cliques(h: UniformHypergraph) -> CliqueReport:
    """All inclusion-maximal cliques, each exactly once, in sorted mask order.

    For n < r the whole vertex set is the single maximal clique.
    """
    n, r = h.n, h.r
    full = (1 << n) - 1
    if n < r:
        return _report([full], n)

    ext = h.extension_masks()
    out: list[int] = []

    def expand(s_list: list[int], s_mask: int, p: int, x: int):
        # s_list is treated as immutable here; extensions rebind a copy
        m_mask = s_mask | p
        # domination: an excluded vertex compatible with everything in
        # sight extends every outcome, so nothing here is maximal
        for u in iter_bits(x):
            if _universal_ok(h, ext, u, m_mask):
                return
        # forced moves: a candidate compatible with everything in sight
        # belongs to every maximal clique of this branch
        while True:
            forced = -1
            for u in iter_bits(p):
                if _universal_ok(h, ext, u, m_mask):
                    forced = u
                    break
            if forced < 0:
                break
            cm = _compat_mask(h, ext, s_list, forced)
            s_list = s_list + [forced]
            s_mask |= 1 << forced
            p &= ~(1 << forced)
            x &= cm
        if p == 0:
            if x == 0:
                out.append(s_mask)
            return
        if r == 2:
            # pivot on the vertex covering most of p
            best_cover, best_cnt = 0, -1
            for u in iter_bits(p | x):
                cnt = popcount(p & ext[u])
                if cnt > best_cnt:
                    best_cover, best_cnt = ext[u], cnt
            branch = p & ~best_cover
        else:
            branch = p
        for v in iter_bits(branch):
            cm = _compat_mask(h, ext, s_list, v)
            expand(s_list + [v], s_mask | (1 << v), p & cm & ~(1 << v), x & cm)
            p &= ~(1 << v)
            x |= 1 << v

    for seed in colex_subsets(n, r - 1):
        seed_mask = mask_of(seed)
        cand = ext[colex_rank(seed)] & ~seed_mask
        top = seed[-1] if seed else -1
        above = ~((1 << (top + 1)) - 1)
        expand(list(seed), seed_mask, cand & above, cand & ~above)

    out.sort()
    return _report(out, n)


def _report(cliques: list[int], n: int) -> CliqueReport:
    per_vertex = [0] * n
    for m in cliques:
        for v in iter_bits(m):
            per_vertex[v] += 1
    return CliqueReport(
        cliques=tuple(cliques),
        c=len(cliques),
        per_vertex=tuple(per_vertex),
        d=min(per_vertex),
    )


def count_maximal_cliques(h: UniformHypergraph) -> int:
    return enumerate_maximal_cliques(h).c


def degrees(h: UniformHypergraph) -> tuple[int, int]:
    """(d, dbar): minimum per-vertex counts of maximal cliques of h and of
    its complement."""
    return (enumerate_maximal_cliques(h).d,
            enumerate_maximal_cliques(h.complement()).d)

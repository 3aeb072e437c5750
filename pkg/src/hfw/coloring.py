"""Edge colorings of complete uniform hypergraphs and their scores.

A coloring assigns one of t colors to every edge of K_n^r, i.e. it is a
factorization into t spanning subhypergraphs.  The score of a coloring is
the sum over colors of the number of maximal cliques of that color class;
a vertex set maximal for several colors counts once per color.  Empty
color classes are legal and score as the edgeless hypergraph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .bits import colex_rank, colex_subsets, vertices_of
from .hypergraph import CliqueReport, UniformHypergraph, enumerate_maximal_cliques


class EdgeColoring:
    """Total map from colex edge rank of K_n^r to a color in {0..t-1}."""

    __slots__ = ("n", "r", "t", "colors")

    def __init__(self, n: int, r: int, t: int, colors):
        if t < 2:
            raise ValueError("a factorization needs at least 2 colors")
        m = comb(n, r)
        colors = bytes(colors)
        if len(colors) != m:
            raise ValueError(f"expected {m} edge colors, got {len(colors)}")
        if any(c >= t for c in colors):
            raise ValueError("edge color out of range")
        # reuse hypergraph validation for n and r
        UniformHypergraph(n, r, 0)
        self.n = n
        self.r = r
        self.t = t
        self.colors = colors

    @classmethod
    def monochromatic(cls, n: int, r: int, t: int, color: int = 0) -> "EdgeColoring":
        return cls(n, r, t, bytes([color]) * comb(n, r))

    @classmethod
    def from_color_map(cls, n: int, r: int, t: int, mapping) -> "EdgeColoring":
        """mapping: edge tuple -> color, must cover every edge exactly once."""
        m = comb(n, r)
        colors = [-1] * m
        for e, col in mapping.items():
            rank = colex_rank(tuple(sorted(e)))
            if colors[rank] != -1:
                raise ValueError(f"edge {tuple(e)!r} assigned twice")
            colors[rank] = col
        if any(c == -1 for c in colors):
            missing = next(e for rank, e in enumerate(colex_subsets(n, r))
                           if colors[rank] == -1)
            raise ValueError(f"edge {missing!r} has no color")
        return cls(n, r, t, colors)

    def factor(self, color: int) -> UniformHypergraph:
        """Spanning subhypergraph carrying the edges of one color."""
        if not 0 <= color < self.t:
            raise ValueError("color out of range")
        bits = 0
        for rank, c in enumerate(self.colors):
            if c == color:
                bits |= 1 << rank
        return UniformHypergraph(self.n, self.r, bits)

    def factors(self) -> list[UniformHypergraph]:
        masks = [0] * self.t
        for rank, c in enumerate(self.colors):
            masks[c] |= 1 << rank
        return [UniformHypergraph(self.n, self.r, m) for m in masks]

    def color_of(self, edge) -> int:
        return self.colors[colex_rank(tuple(sorted(edge)))]

    def relabel(self, perm) -> "EdgeColoring":
        """Image under a vertex permutation (perm[old] = new)."""
        m = comb(self.n, self.r)
        colors = bytearray(m)
        for rank, e in enumerate(colex_subsets(self.n, self.r)):
            new = tuple(sorted(perm[v] for v in e))
            colors[colex_rank(new)] = self.colors[rank]
        return EdgeColoring(self.n, self.r, self.t, colors)

    def permute_colors(self, cperm) -> "EdgeColoring":
        return EdgeColoring(self.n, self.r, self.t,
                            bytes(cperm[c] for c in self.colors))

    def induced(self, vertex_mask: int) -> "EdgeColoring":
        """Restriction to a vertex subset, relabeled to 0..k-1.

        The score of each color class can only drop, so restrictions turn
        witnesses on larger orders into witnesses on smaller ones.
        """
        keep = vertices_of(vertex_mask)
        if len(keep) < 1 or vertex_mask >> self.n:
            raise ValueError("vertex set must be a nonempty subset of the vertices")
        relabel = {v: i for i, v in enumerate(keep)}
        k = len(keep)
        colors = bytearray(comb(k, self.r))
        for sub in combinations(keep, self.r):
            colors[colex_rank(tuple(relabel[v] for v in sub))] = \
                self.colors[colex_rank(sub)]
        return EdgeColoring(k, self.r, self.t, colors)

    def __eq__(self, other):
        return (isinstance(other, EdgeColoring) and self.n == other.n
                and self.r == other.r and self.t == other.t
                and self.colors == other.colors)

    def __hash__(self):
        return hash((self.n, self.r, self.t, self.colors))

    def __repr__(self):
        return f"EdgeColoring(n={self.n}, r={self.r}, t={self.t})"

    # -- json -------------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {"n": self.n, "r": self.r, "t": self.t,
                "colors": list(self.colors)}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "EdgeColoring":
        try:
            n, r, t = obj["n"], obj["r"], obj["t"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"coloring object must have n, r, t: {exc}") from exc
        if "colors" in obj:
            return cls(n, r, t, obj["colors"])
        if "edges" in obj:
            mapping = {}
            for item in obj["edges"]:
                e = tuple(item["e"])
                if len(e) != r or list(e) != sorted(set(e)):
                    raise ValueError(f"malformed edge {item!r}")
                if e in mapping:
                    raise ValueError(f"edge {e!r} listed twice")
                mapping[e] = item["c"]
            return cls.from_color_map(n, r, t, mapping)
        raise ValueError("coloring object needs a 'colors' or 'edges' field")

    @classmethod
    def from_json(cls, text: str) -> "EdgeColoring":
        return cls.from_json_obj(json.loads(text))


@dataclass(frozen=True)
class ScoreReport:
    """Per-color maximal clique counts of a factorization."""

    per_color: tuple[int, ...]
    total: int
    reports: tuple[CliqueReport, ...]


def score(coloring: EdgeColoring) -> ScoreReport:
    reports = tuple(enumerate_maximal_cliques(f) for f in coloring.factors())
    per_color = tuple(rep.c for rep in reports)
    return ScoreReport(per_color=per_color, total=sum(per_color), reports=reports)


def merge_colors(coloring: EdgeColoring, i: int, j: int) -> EdgeColoring:
    """Recolor class j as i and shift the colors above j down by one."""
    t = coloring.t
    if i == j or not (0 <= i < t) or not (0 <= j < t):
        raise ValueError("merge needs two distinct colors below t")
    if t < 3:
        raise ValueError("merging the last two colors would leave a single factor")

    def remap(c):
        if c == j:
            c = i
        return c - 1 if c > j else c

    return EdgeColoring(coloring.n, coloring.r, t - 1,
                        bytes(remap(c) for c in coloring.colors))


def check_pairwise_products(coloring: EdgeColoring) -> bool:
    """Check c_i * c_j >= C(n, r-1) for every pair of distinct colors.

    Holds for every valid coloring; a False return signals an internal
    bug rather than a property of the input.
    """
    n, r = coloring.n, coloring.r
    if n < r - 1:
        raise ValueError("needs n >= r - 1")
    floor = comb(n, r - 1)
    counts = score(coloring).per_color
    return all(counts[i] * counts[j] >= floor
               for i in range(len(counts)) for j in range(i + 1, len(counts)))


def substitute(g: EdgeColoring, v: int, h: EdgeColoring) -> EdgeColoring:
    """Blow up vertex v of g into a copy of h (graphs only).

    The copy occupies positions v .. v+h.n-1; vertices of g above v shift
    up.  Edges inside the copy keep h's colors, edges avoiding the copy
    keep g's colors, and an edge from the copy to u takes the color of
    {v, u} in g.  When v lies in a unique maximal i-clique of g for every
    color i, the per-color counts add as c_i(g) + c_i(h) - 1.
    """
    if g.r != 2 or h.r != 2:
        raise ValueError("substitution is defined for graphs (rank 2) only")
    if g.t != h.t:
        raise ValueError("colorings must use the same number of colors")
    if not 0 <= v < g.n:
        raise ValueError("vertex out of range")

    n_new = g.n + h.n - 1

    def to_g(u):  # inverse placement of an untouched g vertex
        return u if u < v else u - (h.n - 1)

    colors = bytearray(comb(n_new, 2))
    for rank, (a, b) in enumerate(
            (i, j) for j in range(1, n_new) for i in range(j)):
        a_in = v <= a < v + h.n
        b_in = v <= b < v + h.n
        if a_in and b_in:
            colors[rank] = h.color_of((a - v, b - v))
        elif not a_in and not b_in:
            colors[rank] = g.color_of((to_g(a), to_g(b)))
        else:
            outside = to_g(b) if a_in else to_g(a)
            colors[rank] = g.color_of((v, outside))
    return EdgeColoring(n_new, 2, g.t, colors)


def unique_clique_vertex(coloring: EdgeColoring, v: int) -> bool:
    """True iff v lies in exactly one maximal clique of every color class."""
    return all(enumerate_maximal_cliques(f).per_vertex[v] == 1
               for f in coloring.factors())

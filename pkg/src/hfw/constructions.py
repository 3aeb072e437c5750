"""Generators for the explicit factorizations and triple systems.

Everything here is a pure function of its parameters.  Claimed clique
counts are never trusted from a formula: the step-verified constructions
(towers) re-enumerate after every step, and the test suite re-enumerates
the rest.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from itertools import combinations
from math import comb

from .bits import colex_rank, mask_of
from .coloring import EdgeColoring, score, substitute
from .errors import InvariantViolationError, WitnessUnavailableError
from .gf import _factor_prime_power
from .hypergraph import UniformHypergraph, enumerate_maximal_cliques
from .plane import ProjectivePlane, projective_plane

MAX_PLANE_ORDER = 16


# ---------------------------------------------------------------------------
# small fixed systems


def fano() -> UniformHypergraph:
    """The 7-point triple system with every pair on exactly one line."""
    lines = [tuple(sorted(((i) % 7, (i + 1) % 7, (i + 3) % 7))) for i in range(7)]
    return UniformHypergraph.from_edges(7, 3, lines)


def octahedron_system() -> UniformHypergraph:
    """Six faces of the octahedron, the two missing faces sharing a vertex."""
    edges = [(0, 2, 5), (0, 3, 4), (1, 2, 4), (1, 2, 5), (1, 3, 4), (1, 3, 5)]
    return UniformHypergraph.from_edges(6, 3, edges)


# ---------------------------------------------------------------------------
# trivial-order factorization


def turan_factorization(n: int, t: int) -> EdgeColoring:
    """Balanced factorization of K_n^{n-1} into t classes.

    Edges are complements of single vertices; vertex v's edge gets color
    v mod t, which balances the class sizes.
    """
    if n < 3:
        raise ValueError("needs order at least 3 so the rank is at least 2")
    if t < 2:
        raise ValueError("needs at least 2 colors")
    r = n - 1
    colors = bytearray(n)
    full = (1 << n) - 1
    for v in range(n):
        edge = tuple(i for i in range(n) if i != v)
        colors[colex_rank(edge)] = v % t
    return EdgeColoring(n, r, t, colors)


def turan_graph_edges(n: int, t: int) -> int:
    """Edge count of the balanced complete t-partite graph on n vertices."""
    sizes = [n // t + (1 if i < n % t else 0) for i in range(t)]
    return comb(n, 2) - sum(comb(s, 2) for s in sizes)


# ---------------------------------------------------------------------------
# triple system families


def bipartite_triple_system(n: int) -> UniformHypergraph:
    """Triples meeting the first half of the vertices at least twice."""
    if n < 2:
        raise ValueError("needs order at least 2")
    n1 = n // 2
    edges = [e for e in combinations(range(n), 3)
             if sum(1 for v in e if v < n1) >= 2]
    return UniformHypergraph.from_edges(n, 3, edges)


def parity_triple_system(n: int) -> UniformHypergraph:
    """Triples x < y < z (1-based) whose middle element is odd."""
    if n < 2:
        raise ValueError("needs order at least 2")
    edges = [(x, y, z) for x, y, z in combinations(range(n), 3)
             if (y + 1) % 2 == 1]
    return UniformHypergraph.from_edges(n, 3, edges)


def parity_extremal_sets(n: int) -> tuple[set[frozenset], set[frozenset]]:
    """The predicted maximal cliques and anticliques of the parity system.

    For 1-based endpoints a < b of equal parity, the set holds a, b and
    every opposite-parity value between them, clipped to 1..n.  Cliques
    come from even endpoints in 0..n+1, anticliques from odd ones.
    Returned 0-based.
    """
    def family(parity):
        out = set()
        for a in range(parity, n + 2, 2):
            for b in range(a + 2, n + 2, 2):
                xs = {a, b} | {m for m in range(a + 1, b) if (m - a) % 2 == 1}
                clipped = frozenset(v - 1 for v in xs if 1 <= v <= n)
                out.add(clipped)
        return out

    return family(0), family(1)


def add_link_twin(h: UniformHypergraph) -> UniformHypergraph:
    """Extend a triple system by one vertex copying the link of a vertex
    of minimum maximal-clique degree (least index on ties)."""
    if h.r != 3:
        raise ValueError("link-twin extension is defined for triple systems")
    if h.n < 2:
        raise ValueError("needs order at least 2")
    rep = enumerate_maximal_cliques(h)
    v = min(range(h.n), key=lambda u: (rep.per_vertex[u], u))
    new_edges = list(h.edges())
    for e in h.edges():
        if v in e:
            rest = tuple(u for u in e if u != v)
            new_edges.append(rest + (h.n,))
    return UniformHypergraph.from_edges(h.n + 1, 3, new_edges)


def tower_systems(base: UniformHypergraph, target_n: int):
    """Iterate base = H_m, H_{m+1}, ... up to order target_n, where each
    step complements the link-twin extension.

    Every step re-enumerates and checks the expected count transitions
    (c, cbar, d, dbar) -> (cbar, c+d+1, dbar, d+1); a mismatch raises
    InvariantViolationError.  The base must have dbar - d in {0, 1}.
    """
    if base.r != 3:
        raise ValueError("towers are built from triple systems")
    if target_n < base.n:
        raise ValueError("target order below the base order")
    h = base
    rep = enumerate_maximal_cliques(h)
    repc = enumerate_maximal_cliques(h.complement())
    if not 0 <= repc.d - rep.d <= 1:
        raise InvariantViolationError(
            f"base degrees (d, dbar) = ({rep.d}, {repc.d}) are not a half-split")
    yield h
    while h.n < target_n:
        star = add_link_twin(h)
        srep = enumerate_maximal_cliques(star)
        srepc = enumerate_maximal_cliques(star.complement())
        ok = (srep.c == rep.c + rep.d + 1 and srep.d == rep.d + 1
              and srepc.c == repc.c and srepc.d == repc.d)
        if not ok:
            raise InvariantViolationError(
                f"extension of order {h.n} broke a count identity: "
                f"got c*={srep.c}, d*={srep.d}, cbar*={srepc.c}, dbar*={srepc.d}")
        h = star.complement()
        rep, repc = srepc, srep
        yield h


def tower(base: UniformHypergraph, target_n: int) -> UniformHypergraph:
    """Final system of :func:`tower_systems`."""
    h = base
    for h in tower_systems(base, target_n):
        pass
    return h


# ---------------------------------------------------------------------------
# plane-derived colorings


@dataclass(frozen=True)
class _PlaneGeometry:
    plane: ProjectivePlane
    line_of: dict          # (a, b) sorted point pair -> line index
    l0: int                # least line id
    l0_points: tuple[int, ...]


def _geometry(q: int) -> _PlaneGeometry:
    plane = projective_plane(q)
    line_of = {}
    for idx, line in enumerate(plane.lines):
        for a, b in combinations(line, 2):
            line_of[(a, b)] = idx
    return _PlaneGeometry(plane=plane, line_of=line_of, l0=0,
                          l0_points=tuple(plane.lines[0]))


def affine_coloring(q: int) -> EdgeColoring:
    """Color K_{q^2} on the points off one line by the direction of the
    joining line: t = q+1 colors, each class q disjoint cliques of size q,
    and every vertex in exactly one maximal clique per color."""
    geo = _geometry(q)
    anchors = geo.l0_points  # x_0 .. x_q in point-id order
    held = set(anchors)
    verts = [p for p in range(geo.plane.num_points) if p not in held]
    anchor_color = {x: i for i, x in enumerate(anchors)}
    mapping = {}
    for a, b in combinations(range(len(verts)), 2):
        line = geo.plane.lines[geo.line_of[(verts[a], verts[b])]]
        meet = next(x for x in line if x in held)
        mapping[(a, b)] = anchor_color[meet]
    return EdgeColoring.from_color_map(q * q, 2, q + 1, mapping)


def extended_affine_coloring(q: int) -> EdgeColoring:
    """Color K_{q^2+1}: the points off one line plus one of its points x0,
    placed as vertex 0.  t = q colors; x0 lies in exactly one maximal
    clique of every color."""
    geo = _geometry(q)
    anchors = geo.l0_points
    x0, others = anchors[0], anchors[1:]
    anchor_color = {x: i for i, x in enumerate(others)}  # colors 0..q-1
    pencil = sorted(idx for idx, line in enumerate(geo.plane.lines)
                    if x0 in line and idx != geo.l0)
    pencil_color = {idx: i for i, idx in enumerate(pencil)}
    held = set(others)
    verts = [x0] + [p for p in range(geo.plane.num_points)
                    if p not in held and p != x0]
    mapping = {}
    for a, b in combinations(range(len(verts)), 2):
        u, v = sorted((verts[a], verts[b]))
        lidx = geo.line_of[(u, v)]
        if lidx in pencil_color:
            mapping[(a, b)] = pencil_color[lidx]
        else:
            meet = next(x for x in geo.plane.lines[lidx] if x in held)
            mapping[(a, b)] = anchor_color[meet]
    return EdgeColoring.from_color_map(q * q + 1, 2, q, mapping)


def truncated_affine_coloring(q: int) -> EdgeColoring:
    """Color K_{q^2-q} on the points off two lines through x0 by the meet
    with the first line: color 0 carries q-1 maximal cliques, every other
    color q, totalling q^2+q-1."""
    geo = _geometry(q)
    anchors = geo.l0_points
    x0 = anchors[0]
    l1 = min(idx for idx, line in enumerate(geo.plane.lines)
             if x0 in line and idx != geo.l0)
    held = set(anchors)
    removed = held | set(geo.plane.lines[l1])
    verts = [p for p in range(geo.plane.num_points) if p not in removed]
    anchor_color = {x: i for i, x in enumerate(anchors)}
    mapping = {}
    for a, b in combinations(range(len(verts)), 2):
        line = geo.plane.lines[geo.line_of[(verts[a], verts[b])]]
        meet = next(x for x in line if x in held)
        mapping[(a, b)] = anchor_color[meet]
    return EdgeColoring.from_color_map(q * q - q, 2, q + 1, mapping)


# ---------------------------------------------------------------------------
# proper edge colorings (round robin)


def proper_edge_coloring(t: int, n: int) -> EdgeColoring:
    """A proper t-edge-coloring of K_n (each class a matching).

    Exists iff n <= 2*ceil(t/2); scores t*n - C(n,2), the least possible.
    """
    if t < 2:
        raise ValueError("needs at least 2 colors")
    if n > 2 * ((t + 1) // 2):
        raise ValueError(f"K_{n} has no proper {t}-edge-coloring")
    mapping = {}
    if n % 2 == 0 and n >= 2:
        m = n - 1
        for k in range(m):
            mapping[tuple(sorted((n - 1, k)))] = k
            for i in range(1, n // 2):
                mapping[tuple(sorted(((k + i) % m, (k - i) % m)))] = k
    elif n % 2 == 1 and n >= 3:
        for k in range(n):
            for i in range(1, (n + 1) // 2):
                mapping[tuple(sorted(((k + i) % n, (k - i) % n)))] = k
    return EdgeColoring.from_color_map(n, 2, t, mapping)


# ---------------------------------------------------------------------------
# witness chains for the recursive upper bounds


def _is_plane_order(q: int) -> bool:
    return q >= 2 and q <= MAX_PLANE_ORDER and _factor_prime_power(q) is not None


def _stored_manifest() -> dict:
    pkg = resources.files("hfw") / "witnesses" / "manifest.json"
    try:
        return json.loads(pkg.read_text())
    except FileNotFoundError:
        return {}


def stored_witness(t: int, n: int) -> EdgeColoring:
    name = f"t{t}_n{n}.json"
    path = resources.files("hfw") / "witnesses" / name
    try:
        text = path.read_text()
    except FileNotFoundError:
        raise WitnessUnavailableError(t, n) from None
    return EdgeColoring.from_json(text)


def chain_bases(t: int) -> list[tuple[int, int, str]]:
    """(order, total, kind) of every directly buildable base coloring."""
    bases = []
    for n0 in range(1, 2 * ((t + 1) // 2) + 1):
        bases.append((n0, t * n0 - comb(n0, 2), "proper"))
    q = t - 1
    if _is_plane_order(q):
        bases.append((q * q, q * q + q, "affine"))
        if q * q - q >= 1:
            bases.append((q * q - q, q * q + q - 1, "truncated"))
    if _is_plane_order(t):
        bases.append((t * t + 1, t * t + t, "extended"))
    for key, total in _stored_manifest().items():
        st, sn = key.split("_")
        if int(st[1:]) == t:
            bases.append((int(sn[1:]), total, "stored"))
    return bases


def chain_steps(t: int) -> list[tuple[int, str]]:
    """Available order/total increments from gadget substitution."""
    steps = []
    q = t - 1
    if _is_plane_order(q):
        steps.append((q * q - 1, "affine"))
    if _is_plane_order(t):
        steps.append((t * t, "extended"))
    return steps


def chain_table(t: int, horizon: int) -> dict[int, tuple[int, tuple]]:
    """Minimal chain totals per exact order up to horizon.

    Values are (total, plan) with plan a nested tuple: ("base", kind, n0)
    or ("step", kind, inner_plan).
    """
    table: dict[int, tuple[int, tuple]] = {}
    for n0, total, kind in chain_bases(t):
        if n0 <= horizon and (n0 not in table or total < table[n0][0]):
            table[n0] = (total, ("base", kind, n0))
    steps = chain_steps(t)
    for order in range(1, horizon + 1):
        if order not in table:
            continue
        total, plan = table[order]
        for delta, kind in steps:
            o2 = order + delta
            if o2 <= horizon and (o2 not in table or total + delta < table[o2][0]):
                table[o2] = (total + delta, ("step", kind, plan))
    return table


def chain_upper_value(t: int, n: int) -> int | None:
    """Best chain total at order >= n (a valid upper value at n after
    restriction), or None if no chain reaches that far."""
    if t < 3:
        return None
    steps = chain_steps(t)
    if not steps:
        return None
    horizon = n + max(delta for delta, _ in steps) + 1
    table = chain_table(t, horizon)
    candidates = [total for order, (total, _) in table.items() if order >= n]
    return min(candidates) if candidates else None


def _materialize(t: int, plan: tuple) -> EdgeColoring:
    kind = plan[0]
    if kind == "base":
        _, base_kind, n0 = plan
        if base_kind == "proper":
            return proper_edge_coloring(t, n0)
        if base_kind == "affine":
            return affine_coloring(t - 1)
        if base_kind == "truncated":
            return truncated_affine_coloring(t - 1)
        if base_kind == "extended":
            return extended_affine_coloring(t)
        if base_kind == "stored":
            return stored_witness(t, n0)
        raise AssertionError(base_kind)
    _, step_kind, inner = plan
    inner_coloring = _materialize(t, inner)
    gadget = affine_coloring(t - 1) if step_kind == "affine" \
        else extended_affine_coloring(t)
    # both gadgets have their unique-per-color vertex first
    return substitute(gadget, 0, inner_coloring)


def witness_upper(t: int, n: int) -> EdgeColoring:
    """A t-coloring of K_n meeting the recursive upper bounds.

    Builds the cheapest chain of gadget substitutions landing on an order
    at least n, then restricts to the first n vertices.  Supported for
    t in {3, 4, 5}.
    """
    if t not in (3, 4, 5):
        raise ValueError("witness chains are provided for 3, 4 or 5 colors")
    if n < 1:
        raise ValueError("order must be positive")
    steps = chain_steps(t)
    horizon = n + max(delta for delta, _ in steps) + 1
    table = chain_table(t, horizon)
    best = None
    for order in range(n, horizon + 1):
        if order in table and (best is None or table[order][0] < best[0]):
            best = (table[order][0], order, table[order][1])
    if best is None:
        raise WitnessUnavailableError(t, n)
    _, order, plan = best
    coloring = _materialize(t, plan)
    if coloring.n != order:
        raise InvariantViolationError(
            f"chain produced order {coloring.n}, planned {order}")
    if order > n:
        coloring = coloring.induced((1 << n) - 1)
    return coloring

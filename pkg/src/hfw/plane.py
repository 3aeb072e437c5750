"""Finite projective planes and their extraction from optimal colorings.

Planes of prime power order q <= 16 are built from the rank-3 vector
space over GF(q): points are the normalized 1-dimensional subspaces
(first nonzero coordinate scaled to 1), lines the 2-dimensional ones via
their dual coordinates, both sorted lexicographically so ids are
reproducible.  The three incidence axioms are re-checked on every
constructed plane rather than trusted from the algebra.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .bits import iter_bits, vertices_of
from .coloring import EdgeColoring, score
from .errors import NotAPlaneWitnessError, UnsupportedOrderError
from .gf import FiniteField


@dataclass(frozen=True)
class ProjectivePlane:
    """Point/line incidence structure of order q.

    Points are 0 .. q^2+q; lines are sorted tuples of point ids.
    """

    q: int
    lines: tuple[tuple[int, ...], ...]

    @property
    def num_points(self) -> int:
        return self.q * self.q + self.q + 1

    def check_axioms(self) -> None:
        """Raise NotAPlaneWitnessError unless all three axioms hold."""
        q, npts = self.q, self.num_points
        if len(self.lines) != npts:
            raise NotAPlaneWitnessError(
                f"expected {npts} lines, found {len(self.lines)}")
        if any(len(set(l)) != q + 1 for l in self.lines):
            raise NotAPlaneWitnessError("every line must carry q+1 distinct points")
        if any(v < 0 or v >= npts for l in self.lines for v in l):
            raise NotAPlaneWitnessError("line uses an unknown point id")

        line_masks = [sum(1 << v for v in l) for l in self.lines]
        # two distinct points on exactly one common line
        through = [0] * npts  # bitmask over line indices
        for idx, m in enumerate(line_masks):
            for v in iter_bits(m):
                through[v] |= 1 << idx
        for a, b in combinations(range(npts), 2):
            common = through[a] & through[b]
            if common == 0 or common & (common - 1):
                raise NotAPlaneWitnessError(
                    f"points {a},{b} lie on {bin(common).count('1')} common lines")
        # two distinct lines meet in exactly one point
        for i, j in combinations(range(len(line_masks)), 2):
            inter = line_masks[i] & line_masks[j]
            if inter == 0 or inter & (inter - 1):
                raise NotAPlaneWitnessError(
                    f"lines {i},{j} meet in {inter.bit_count()} points")
        # a quadrilateral: four points, no three collinear
        if self._quadrilateral(line_masks, through) is None:
            raise NotAPlaneWitnessError("no four points in general position")

    def _quadrilateral(self, line_masks, through):
        npts = self.num_points
        l0 = line_masks[0]
        pts0 = vertices_of(l0)
        if len(pts0) < 2:
            return None
        a, b = pts0[0], pts0[1]
        for c in range(npts):
            if (l0 >> c) & 1:
                continue
            lac = line_masks[(through[a] & through[c]).bit_length() - 1]
            lbc = line_masks[(through[b] & through[c]).bit_length() - 1]
            blocked = l0 | lac | lbc
            for d in range(npts):
                if not (blocked >> d) & 1:
                    return (a, b, c, d)
        return None

    def point_line_counts(self) -> list[int]:
        counts = [0] * self.num_points
        for l in self.lines:
            for v in l:
                counts[v] += 1
        return counts

    def to_json_obj(self) -> dict:
        return {"q": self.q, "lines": [list(l) for l in self.lines]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "ProjectivePlane":
        try:
            q, lines = obj["q"], obj["lines"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"plane object must have q and lines: {exc}") from exc
        return cls(q=q, lines=tuple(tuple(l) for l in lines))


def projective_plane(q: int) -> ProjectivePlane:
    """The plane over GF(q) with lexicographically sorted labels.

    Raises UnsupportedOrderError unless q is a prime power at most 16.
    """
    field = FiniteField(q)  # raises for bad orders

    def normalize(vec):
        for i in range(3):
            if vec[i]:
                inv = field.inv(vec[i])
                return tuple(field.mul(inv, x) for x in vec)
        return None

    reps = set()
    for x in field.elements():
        for y in field.elements():
            for z in field.elements():
                nv = normalize((x, y, z))
                if nv:
                    reps.add(nv)
    points = sorted(reps)
    assert len(points) == q * q + q + 1
    point_id = {v: i for i, v in enumerate(points)}

    lines = []
    for dual in points:  # duals normalize the same way
        a, b, c = dual
        members = sorted(
            point_id[pt] for pt in points
            if field.add(field.add(field.mul(a, pt[0]), field.mul(b, pt[1])),
                         field.mul(c, pt[2])) == 0)
        lines.append(tuple(members))
    lines.sort()

    plane = ProjectivePlane(q=q, lines=tuple(lines))
    plane.check_axioms()
    return plane


def plane_from_coloring(coloring: EdgeColoring) -> ProjectivePlane:
    """Reassemble a projective plane from a coloring meeting the optimum.

    Requires a graph coloring with t = m+1 colors on m^2 vertices whose
    color classes each split into m disjoint maximal cliques of size m
    with cross-color cliques meeting in one vertex.  Any failed check
    raises NotAPlaneWitnessError: the coloring is not a plane witness.
    """
    if coloring.r != 2:
        raise NotAPlaneWitnessError("plane extraction needs a graph coloring")
    m = coloring.t - 1
    if m < 2 or coloring.n != m * m:
        raise NotAPlaneWitnessError(
            f"needs t = m+1 colors on m^2 vertices; got t={coloring.t}, n={coloring.n}")

    rep = score(coloring)
    if any(c != m for c in rep.per_color):
        raise NotAPlaneWitnessError(
            f"per-color maximal clique counts {rep.per_color} != {m} everywhere")
    for color, crep in enumerate(rep.reports):
        sizes = [mask.bit_count() for mask in crep.cliques]
        if any(s != m for s in sizes):
            raise NotAPlaneWitnessError(
                f"color {color} has maximal cliques of sizes {sizes}, want all {m}")
        for a, b in combinations(crep.cliques, 2):
            if a & b:
                raise NotAPlaneWitnessError(
                    f"color {color} has intersecting maximal cliques")
    for c1, c2 in combinations(range(coloring.t), 2):
        for a in rep.reports[c1].cliques:
            for b in rep.reports[c2].cliques:
                inter = a & b
                if inter == 0 or inter & (inter - 1):
                    raise NotAPlaneWitnessError(
                        f"cliques of colors {c1},{c2} do not meet in one point")

    # points: the n vertices, then one point per color
    n = coloring.n
    lines = [tuple(range(n, n + coloring.t))]
    for color, crep in enumerate(rep.reports):
        for mask in crep.cliques:
            lines.append(tuple(sorted(vertices_of(mask) + (n + color,))))
    lines.sort()
    plane = ProjectivePlane(q=m, lines=tuple(lines))
    plane.check_axioms()
    return plane

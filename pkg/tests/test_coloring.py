import json
import random
from itertools import combinations, product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hfw.coloring import (
    EdgeColoring,
    check_pairwise_products,
    merge_colors,
    score,
    substitute,
    unique_clique_vertex,
)
from hfw.hypergraph import UniformHypergraph, enumerate_maximal_cliques
from oracles import oracle_score


def cube_coloring():
    """K_8 on the cube vertices: color 0 = cube edges, 1 = face diagonals,
    2 = space diagonals (by Hamming distance of the 3-bit labels)."""
    mapping = {}
    for a, b in combinations(range(8), 2):
        dist = bin(a ^ b).count("1")
        mapping[(a, b)] = dist - 1
    return EdgeColoring.from_color_map(8, 2, 3, mapping)


class TestScore:
    def test_single_edge_three_colors(self):
        c = EdgeColoring(2, 2, 3, [0])
        rep = score(c)
        assert rep.per_color == (1, 2, 2)
        assert rep.total == 5

    def test_cube_example(self):
        rep = score(cube_coloring())
        assert rep.per_color[0] == 12
        assert rep.per_color[1] == 2

    def test_monochromatic_total(self):
        for n, r, t in [(5, 2, 3), (6, 3, 2), (4, 2, 4)]:
            rep = score(EdgeColoring.monochromatic(n, r, t))
            assert rep.total == 1 + (t - 1) * comb(n, r - 1)

    def test_score_matches_oracle_randoms(self):
        rng = random.Random(3)
        for _ in range(15):
            n = rng.randint(1, 6)
            r = rng.choice([2, 3])
            t = rng.randint(2, 3)
            m = comb(n, r)
            colors = [rng.randrange(t) for _ in range(m)]
            col = EdgeColoring(n, r, t, colors)
            mapping = {e: col.color_of(e) for e in combinations(range(n), r)}
            per_color, total = oracle_score(n, r, t, mapping)
            rep = score(col)
            assert list(rep.per_color) == per_color
            assert rep.total == total

    def test_empty_color_classes_count(self):
        # nothing colored 1 or 2: they still score as the edgeless graph
        rep = score(EdgeColoring.monochromatic(5, 2, 3))
        assert rep.per_color[1] == rep.per_color[2] == 5


class TestMerge:
    def test_cube_merge_is_multipartite(self):
        merged = merge_colors(cube_coloring(), 0, 1)
        rep = score(merged)
        assert merged.t == 2
        assert rep.per_color[0] == 16  # one vertex per antipodal pair

    def test_merge_shifts_colors_down(self):
        c = EdgeColoring(3, 2, 4, [1, 2, 3])
        m = merge_colors(c, 0, 2)
        assert m.t == 3
        assert list(m.colors) == [1, 0, 2]

    def test_merge_rejects_bad_args(self):
        c = EdgeColoring(3, 2, 3, [0, 1, 2])
        with pytest.raises(ValueError):
            merge_colors(c, 1, 1)
        with pytest.raises(ValueError):
            merge_colors(c, 0, 3)

    def test_merge_empty_classes_keeps_vertex_count(self):
        c = EdgeColoring.monochromatic(6, 2, 4)
        m = merge_colors(c, 1, 2)
        assert score(m).per_color[1] == 6

    def test_merge_moves_total_both_ways(self):
        # merge two random disjoint classes of a 3-coloring of K_7; both a
        # strict increase and a strict decrease show up within the scan
        rng = random.Random(4)
        m = comb(7, 2)
        saw_up = saw_down = False
        for _ in range(4000):
            bits1 = rng.randrange(1 << m)
            bits2 = rng.randrange(1 << m) & ~bits1
            colors = [0 if (bits1 >> k) & 1 else 1 if (bits2 >> k) & 1 else 2
                      for k in range(m)]
            c = EdgeColoring(7, 2, 3, colors)
            before = score(c).total
            after = score(merge_colors(c, 0, 1)).total
            saw_up = saw_up or after > before
            saw_down = saw_down or after < before
            if saw_up and saw_down:
                break
        assert saw_up and saw_down


class TestPairwiseProducts:
    def test_exhaustive_two_colorings_of_k4(self):
        floor = comb(4, 1)
        for bits in range(1 << 6):
            colors = [(bits >> k) & 1 for k in range(6)]
            c = EdgeColoring(4, 2, 2, colors)
            assert check_pairwise_products(c)
            rep = score(c)
            assert rep.per_color[0] * rep.per_color[1] >= floor

    def test_single_edge_example(self):
        assert check_pairwise_products(EdgeColoring(2, 2, 3, [0]))

    def test_random_colorings(self):
        rng = random.Random(5)
        for _ in range(60):
            n = rng.randint(2, 7)
            r = rng.choice([2, 3])
            if n < r - 1:
                continue
            t = rng.randint(2, 4)
            colors = [rng.randrange(t) for _ in range(comb(n, r))]
            assert check_pairwise_products(EdgeColoring(n, r, t, colors))


def all_two_colorings(n):
    m = comb(n, 2)
    for bits in range(1 << m):
        yield EdgeColoring(n, 2, 2, [(bits >> k) & 1 for k in range(m)])


class TestSubstitute:
    def test_point_substitution_is_identity(self):
        rng = random.Random(6)
        colors = [rng.randrange(3) for _ in range(comb(5, 2))]
        g = EdgeColoring(5, 2, 3, colors)
        h = EdgeColoring(1, 2, 3, [])
        for v in range(5):
            assert substitute(g, v, h) == g

    def test_substituting_into_k1_copies(self):
        g = EdgeColoring(1, 2, 2, [])
        h = EdgeColoring(4, 2, 2, [0, 1, 0, 1, 0, 1])
        assert substitute(g, 0, h) == h

    def test_count_identity_under_uniqueness(self):
        # exhaustive over 2-colorings of K_4, vertices in a unique maximal
        # clique per color, paired with all 2-colorings of K_3
        hs = list(all_two_colorings(3))
        checked = 0
        for g in all_two_colorings(4):
            g_counts = score(g).per_color
            for v in range(4):
                if not unique_clique_vertex(g, v):
                    continue
                for h in hs:
                    res = substitute(g, v, h)
                    h_counts = score(h).per_color
                    want = tuple(gc + hc - 1 for gc, hc in zip(g_counts, h_counts))
                    assert score(res).per_color == want
                    checked += 1
        assert checked > 0

    def test_counterexample_without_uniqueness(self):
        # the identity must fail somewhere once the uniqueness hypothesis
        # is dropped; find a small violating instance
        hs = list(all_two_colorings(3))
        for g in all_two_colorings(4):
            g_counts = score(g).per_color
            for v in range(4):
                if unique_clique_vertex(g, v):
                    continue
                for h in hs:
                    res = substitute(g, v, h)
                    h_counts = score(h).per_color
                    want = tuple(gc + hc - 1 for gc, hc in zip(g_counts, h_counts))
                    if score(res).per_color != want:
                        return
        pytest.fail("expected a counterexample without the uniqueness hypothesis")

    def test_substitute_rejects_mismatched_colors(self):
        g = EdgeColoring(3, 2, 2, [0, 1, 0])
        h = EdgeColoring(3, 2, 3, [0, 1, 2])
        with pytest.raises(ValueError):
            substitute(g, 0, h)

    def test_substitute_rejects_rank_3(self):
        g = EdgeColoring(4, 3, 2, [0] * 4)
        with pytest.raises(ValueError):
            substitute(g, 0, g)


class TestInvariance:
    @settings(max_examples=30)
    @given(st.data())
    def test_score_invariant_under_relabeling(self, data):
        n = data.draw(st.integers(min_value=2, max_value=6))
        r = data.draw(st.sampled_from([2, 3]))
        t = data.draw(st.integers(min_value=2, max_value=3))
        m = comb(n, r)
        colors = data.draw(st.lists(st.integers(0, t - 1), min_size=m, max_size=m))
        perm = data.draw(st.permutations(list(range(n))))
        c = EdgeColoring(n, r, t, colors)
        assert score(c.relabel(perm)).total == score(c).total

    @settings(max_examples=30)
    @given(st.data())
    def test_score_invariant_under_color_permutation(self, data):
        n = data.draw(st.integers(min_value=2, max_value=6))
        t = data.draw(st.integers(min_value=2, max_value=4))
        m = comb(n, 2)
        colors = data.draw(st.lists(st.integers(0, t - 1), min_size=m, max_size=m))
        cperm = data.draw(st.permutations(list(range(t))))
        c = EdgeColoring(n, 2, t, colors)
        assert sorted(score(c.permute_colors(cperm)).per_color) == \
            sorted(score(c).per_color)


class TestJson:
    def test_colors_form_round_trip(self):
        c = cube_coloring()
        assert EdgeColoring.from_json(c.to_json()) == c

    def test_edge_list_form(self):
        obj = {"n": 3, "r": 2, "t": 2,
               "edges": [{"e": [0, 1], "c": 0}, {"e": [0, 2], "c": 1},
                         {"e": [1, 2], "c": 1}]}
        c = EdgeColoring.from_json_obj(obj)
        assert list(c.colors) == [0, 1, 1]

    def test_edge_list_must_cover_exactly_once(self):
        base = {"n": 3, "r": 2, "t": 2}
        with pytest.raises(ValueError):
            EdgeColoring.from_json_obj(
                {**base, "edges": [{"e": [0, 1], "c": 0}]})
        with pytest.raises(ValueError):
            EdgeColoring.from_json_obj(
                {**base, "edges": [{"e": [0, 1], "c": 0}, {"e": [0, 1], "c": 1},
                                   {"e": [0, 2], "c": 0}, {"e": [1, 2], "c": 0}]})

    def test_rejects_color_out_of_range(self):
        with pytest.raises(ValueError):
            EdgeColoring(3, 2, 2, [0, 1, 2])

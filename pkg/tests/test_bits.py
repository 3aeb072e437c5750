from itertools import combinations

from hypothesis import given
from hypothesis import strategies as st

from hfw.bits import (
    colex_rank,
    colex_subsets,
    colex_unrank,
    inner_rank_bits,
    mask_of,
    pairs_colex,
    vertices_of,
)
from oracles import oracle_colex_rank


def test_colex_order_is_sorted_by_rank():
    for n, r in [(6, 2), (6, 3), (7, 3), (5, 4)]:
        subs = list(colex_subsets(n, r))
        ranks = [colex_rank(s) for s in subs]
        assert ranks == list(range(len(subs)))


def test_rank_matches_independent_ordering():
    for n, r in [(7, 2), (6, 3)]:
        for s in combinations(range(n), r):
            assert colex_rank(s) == oracle_colex_rank(s)


@given(st.sets(st.integers(min_value=0, max_value=30), min_size=1, max_size=6))
def test_unrank_inverts_rank(vs):
    s = tuple(sorted(vs))
    assert colex_unrank(colex_rank(s), len(s)) == s


@given(st.integers(min_value=0, max_value=10000), st.integers(min_value=1, max_value=5))
def test_rank_inverts_unrank(rank, r):
    assert colex_rank(colex_unrank(rank, r)) == rank


def test_mask_round_trip():
    assert vertices_of(mask_of([5, 1, 3])) == (1, 3, 5)
    assert vertices_of(0) == ()


def test_pairs_colex_agrees_with_subsets():
    assert list(pairs_colex(5)) == list(colex_subsets(5, 2))


def test_inner_rank_bits_small():
    table = inner_rank_bits(4, 2)
    # subset {0,1,2} contains pairs 01,02,12 = colex ranks 0,1,2
    assert table[0b0111] == 0b111
    # full set contains all six pairs
    assert table[0b1111] == 0b111111
    assert table[0b0001] == 0

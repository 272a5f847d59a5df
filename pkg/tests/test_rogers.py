import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperstep.deltas import (
    classify,
    delta_sequence,
    extrema_count,
    is_monotone,
    realize_delta_sequence,
)
from hyperstep.rogers import (
    build_tower,
    lift_hypergraph,
    repair_seven,
    rogers_edge,
    zigzag_extract,
)
from hyperstep.structures import ExplicitHypergraph


EMPTY6 = ExplicitHypergraph(6, 7)
FULL6 = ExplicitHypergraph.complete(6, 7)


def chain_from(deltas):
    return realize_delta_sequence(deltas)


def test_rogers_edge_examples():
    assert rogers_edge(EMPTY6, chain_from((6, 1, 5, 2, 4, 3)).vertices)
    assert not rogers_edge(EMPTY6, chain_from((1, 2, 3, 4, 6, 5)).vertices)
    assert rogers_edge(FULL6, chain_from((1, 2, 3, 4, 5, 6)).vertices)
    assert not rogers_edge(EMPTY6, chain_from((1, 2, 3, 4, 5, 6)).vertices)


def test_rogers_edge_preconditions():
    with pytest.raises(ValueError):
        rogers_edge(ExplicitHypergraph(5, 7), chain_from((1, 2, 3, 4, 5)).vertices)
    with pytest.raises(ValueError):
        rogers_edge(EMPTY6, (0, 1, 2, 3, 4, 5, 1 << 8))  # outside 2^7


def test_edge_rule_equivalence_exhaustive():
    """Non-monotone: m in {k-4, k-3} iff at most one locally monotone interior."""
    for k in (7, 8, 9):
        interior = k - 3
        for perm in itertools.permutations(range(k - 1)):
            if is_monotone(perm):
                continue
            m = extrema_count(perm)
            locally_monotone = interior - m
            assert (m in (k - 4, k - 3)) == (locally_monotone <= 1)


def test_repair_seven_examples():
    chain = chain_from((6, 1, 5, 2, 4, 3))
    index = repair_seven(chain)
    assert index == 2
    repaired = chain.drop(index)
    assert repaired.deltas == (6, 5, 2, 4, 3)
    assert extrema_count(repaired.deltas) == 2

    chain = chain_from((1, 6, 2, 5, 3, 4))
    index = repair_seven(chain)
    assert index == 3
    repaired = chain.drop(index)
    assert repaired.deltas == (1, 6, 5, 3, 4)
    assert extrema_count(repaired.deltas) == 2


def test_repair_seven_rejects_wrong_extrema_count():
    chain = chain_from((1, 2, 3, 4, 5, 6))
    with pytest.raises(ValueError):
        repair_seven(chain)
    chain = chain_from((2, 1, 3, 4, 5, 6))
    with pytest.raises(ValueError):
        repair_seven(chain)


def test_repair_seven_exhaustive_over_permutations():
    """Every length-6 delta permutation with 4 extrema repairs to 2."""
    hits = 0
    for perm in itertools.permutations(range(6)):
        chain = chain_from(perm)
        if extrema_count(perm) != 4:
            continue
        hits += 1
        index = repair_seven(chain)
        assert 1 <= index <= 5
        assert extrema_count(chain.drop(index).deltas) == 2
    assert hits > 0


def test_zigzag_examples():
    chain = chain_from((1, 9, 2, 8, 3, 7, 4, 6, 5))
    out = zigzag_extract(chain, 5)
    assert len(out) == 6
    assert extrema_count(out.deltas) == 3
    with pytest.raises(ValueError):
        zigzag_extract(chain_from((1, 9, 2, 8, 3)), 5)  # only 4 extrema


def test_zigzag_even_k_first_max_starts_at_first_vertex():
    # first extremum a maximum, k even: construction begins with the chain head
    chain = chain_from((1, 9, 2, 8, 3, 7, 4, 6, 5))
    assert extrema_count(chain.deltas) == 7
    out = zigzag_extract(chain, 6)
    assert out.vertices[0] == chain.vertices[0]
    assert extrema_count(out.deltas) == 4


def random_chain_with_extrema(rng, k, min_extrema):
    length = k + 8
    while True:
        perm = list(range(length))
        rng.shuffle(perm)
        if extrema_count(perm) >= min_extrema:
            return chain_from(perm)


def test_zigzag_randomized_all_cases():
    rng = random.Random(2024)
    for k in range(5, 10):
        for _ in range(50):
            chain = random_chain_with_extrema(rng, k, k)
            out = zigzag_extract(chain, k)
            assert len(out) == k + 1
            assert extrema_count(out.deltas) == k - 2
            assert set(out.vertices) <= set(chain.vertices)


def test_zigzag_delete_one_keeps_m_large():
    """Each k-subset of the zigzag output stays an edge candidate: m >= k-4."""
    rng = random.Random(77)
    for k in (7, 8, 9):
        for _ in range(40):
            chain = random_chain_with_extrema(rng, k, k)
            out = zigzag_extract(chain, k)
            for drop in range(k + 1):
                sub = out.drop(drop)
                assert extrema_count(sub.deltas) >= k - 4


def test_build_tower_examples():
    base = ExplicitHypergraph(14, 20)
    stack = build_tower(base, 0)
    assert len(stack) == 1
    stack = build_tower(base, 1)
    assert stack.top.k == 15
    assert stack.top.n == 1 << 20
    stack = build_tower(base, 2)
    assert stack.top.k == 16
    assert stack.top.n == 1 << (1 << 20)


def test_build_tower_uniformity_threshold():
    with pytest.raises(ValueError):
        build_tower(ExplicitHypergraph(4, 8), 1)
    with pytest.raises(ValueError):
        lift_hypergraph(ExplicitHypergraph(5, 8).to_implicit())


def test_tower_edge_evaluation_at_level_one():
    rng = random.Random(1)
    base = ExplicitHypergraph.random(6, 8, rng, 0.5)
    stack = build_tower(base, 1)
    top = stack.top
    assert top.n == 256
    sample = tuple(sorted(rng.sample(range(256), 7)))
    assert top.edge(sample) == rogers_edge(base, sample)


@settings(max_examples=100, deadline=None)
@given(st.sets(st.integers(0, (1 << 20) - 1), min_size=7, max_size=7))
def test_edge_rule_monotone_vs_extrema(vertices):
    vs = tuple(sorted(vertices))
    base_empty = ExplicitHypergraph(6, 20)
    chain = delta_sequence(vs)
    expected = (not is_monotone(chain.deltas)) and extrema_count(
        chain.deltas
    ) in (3, 4)
    assert rogers_edge(base_empty, vs) == expected

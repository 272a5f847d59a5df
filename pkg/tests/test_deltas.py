import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperstep.deltas import (
    Label,
    classify,
    delta,
    delta_sequence,
    extrema_count,
    is_monotone,
    is_realizable,
    realize_delta_sequence,
)


def brute_minimal_realization(deltas, limit=256):
    """Exhaustive lexicographically minimal chain with the given delta sequence."""
    r = len(deltas) + 1
    best = None
    for chain in itertools.combinations(range(limit), r):
        if tuple(delta(x, y) for x, y in zip(chain, chain[1:])) == tuple(deltas):
            best = chain if best is None or chain < best else best
    return best


def test_delta_examples():
    assert delta(3, 5) == 2
    assert delta(0, 1) == 0
    assert delta(4, 5) == 0


def test_delta_symmetric_and_errors():
    assert delta(9, 3) == delta(3, 9)
    with pytest.raises(ValueError):
        delta(7, 7)
    with pytest.raises(ValueError):
        delta(-1, 3)


def test_delta_sequence_examples():
    assert delta_sequence((0, 1, 2, 4)).deltas == (0, 1, 2)
    assert delta_sequence((0, 8, 12, 14)).deltas == (3, 2, 1)
    assert delta_sequence((0, 2, 3, 7)).deltas == (1, 0, 2)


def test_delta_sequence_rejects_bad_input():
    with pytest.raises(ValueError):
        delta_sequence((3,))
    with pytest.raises(ValueError):
        delta_sequence((1, 1, 2))
    with pytest.raises(ValueError):
        delta_sequence((5, 2, 8))


def test_classify_examples():
    got = classify((1, 2, 3, 4))
    assert got.extrema_count == 0
    assert all(
        label is Label.LOCALLY_MONOTONE for label in got.labels[1:-1]
    )

    got = classify((1, 5, 3, 8, 2))
    assert got.extrema_count == 3
    assert got.labels[1:-1] == (Label.LOCAL_MAX, Label.LOCAL_MIN, Label.LOCAL_MAX)

    got = classify((6, 1, 5, 2, 4, 3))
    assert got.extrema_count == 4
    assert got.labels[1:-1] == (
        Label.LOCAL_MIN,
        Label.LOCAL_MAX,
        Label.LOCAL_MIN,
        Label.LOCAL_MAX,
    )


def test_classify_endpoints_and_errors():
    got = classify((3, 7))
    assert got.labels == (Label.ENDPOINT, Label.ENDPOINT)
    assert got.extrema_count == 0
    with pytest.raises(ValueError):
        classify((1, 1, 2))


def test_classify_allows_nonadjacent_repeats():
    got = classify((1, 0, 1))
    assert got.extrema_count == 1
    assert got.labels[1] is Label.LOCAL_MIN


def test_is_realizable_examples():
    assert not is_realizable((2, 1, 2))
    assert is_realizable((6, 1, 5, 2, 4, 3))
    assert not is_realizable((1, 0, 1))


def test_realize_examples():
    assert realize_delta_sequence((0,)).vertices == (0, 1)
    assert realize_delta_sequence((1, 0)).vertices == (0, 2, 3)
    assert realize_delta_sequence((0, 1)).vertices == (0, 1, 2)


def test_realize_matches_brute_force_minimum():
    for deltas in itertools.product(range(3), repeat=3):
        if not is_realizable(deltas):
            with pytest.raises(ValueError):
                realize_delta_sequence(deltas)
            continue
        got = realize_delta_sequence(deltas)
        assert got.vertices == brute_minimal_realization(deltas, limit=16)


def test_realize_rejects_empty():
    with pytest.raises(ValueError):
        realize_delta_sequence(())


@given(st.sets(st.integers(0, 1023), min_size=3, max_size=3))
def test_property_a_on_random_triples(vertices):
    a, b, c = sorted(vertices)
    assert delta(a, b) != delta(b, c)


@given(st.sets(st.integers(0, 255), min_size=2, max_size=8))
def test_property_b_on_random_chains(vertices):
    chain = sorted(vertices)
    ds = [delta(x, y) for x, y in zip(chain, chain[1:])]
    assert delta(chain[0], chain[-1]) == max(ds)


@given(st.sets(st.integers(0, 4095), min_size=2, max_size=10))
def test_chain_windows_have_unique_maxima(vertices):
    chain = delta_sequence(sorted(vertices))
    assert is_realizable(chain.deltas)


@given(st.lists(st.integers(0, 9), min_size=1, max_size=8))
def test_realize_round_trip(deltas):
    if not is_realizable(deltas):
        return
    chain = realize_delta_sequence(deltas)
    assert chain.deltas == tuple(deltas)
    assert delta_sequence(chain.vertices).deltas == tuple(deltas)


@given(st.sets(st.integers(0, 1 << 16), min_size=2, max_size=9))
def test_delta_sequence_then_realize_round_trip(vertices):
    chain = delta_sequence(sorted(vertices))
    again = realize_delta_sequence(chain.deltas)
    assert again.deltas == chain.deltas


@given(
    st.lists(st.integers(0, 9), min_size=3, max_size=9),
    st.integers(1, 50),
)
def test_classify_is_order_isomorphism_invariant(deltas, stretch):
    if any(x == y for x, y in zip(deltas, deltas[1:])):
        return
    relabeled = [stretch * d + 7 for d in deltas]
    original = classify(deltas)
    mapped = classify(relabeled)
    assert original.labels == mapped.labels
    assert original.extrema_count == mapped.extrema_count


def test_extrema_count_agrees_with_classify():
    rng = random.Random(5)
    for _ in range(300):
        length = rng.randint(1, 9)
        while True:
            ds = [rng.randint(0, 6) for _ in range(length)]
            if all(x != y for x, y in zip(ds, ds[1:])):
                break
        assert extrema_count(ds) == classify(ds).extrema_count


def test_monotone_helper():
    assert is_monotone((1, 2, 5))
    assert is_monotone((5, 2, 1))
    assert is_monotone((3,))
    assert not is_monotone((1, 3, 2))


def test_drop_recombines_by_max_rule():
    chain = delta_sequence((0, 8, 12, 14, 15))
    dropped = chain.drop(1)
    assert dropped.vertices == (0, 12, 14, 15)
    assert dropped.deltas == (3, 1, 0)

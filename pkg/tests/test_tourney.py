import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperstep.structures import Color
from hyperstep.tourney import (
    GraphColoring2,
    Tournament,
    coloring_to_tournament,
    compute_T,
    frankl_wilson_explicit,
    frankl_wilson_graph,
    hamiltonian_path,
    is_prime,
    is_transitive,
    max_transitive,
    monochromatic_chain,
    paley_graph,
    qr_tournament,
    quadratic_residues,
    subset_unrank,
    tournament_to_coloring,
)

CYCLE3 = Tournament.from_beats(3, [(0, 1), (1, 2), (2, 0)])


def all_red(n):
    return GraphColoring2.from_function(n, lambda i, j: Color.RED)


def all_blue(n):
    return GraphColoring2.from_function(n, lambda i, j: Color.BLUE)


def test_transform_all_red_is_transitive_forward():
    t = coloring_to_tournament(all_red(6))
    assert all(t.beats(i, j) for i in range(6) for j in range(i + 1, 6))
    assert hamiltonian_path(t) == (0, 1, 2, 3, 4, 5)


def test_transform_all_blue_reverses():
    t = coloring_to_tournament(all_blue(6))
    assert hamiltonian_path(t) == (5, 4, 3, 2, 1, 0)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, (1 << 66) - 1))
def test_transform_round_trip(bits):
    chi = GraphColoring2.from_bits(12, bits)
    again = tournament_to_coloring(coloring_to_tournament(chi))
    assert again.red_rows == chi.red_rows


def test_is_transitive():
    assert not is_transitive(CYCLE3)
    assert is_transitive(CYCLE3, (0, 1))
    assert is_transitive(Tournament.transitive(5))


def test_hamiltonian_path_errors_on_cycle():
    with pytest.raises(ValueError):
        hamiltonian_path(CYCLE3)


def test_hamiltonian_path_orders_by_wins():
    t = Tournament.from_beats(3, [(2, 1), (2, 0), (1, 0)])
    assert hamiltonian_path(t) == (2, 1, 0)


def test_hamiltonian_path_outdegrees_are_distinct():
    rng = random.Random(4)
    for _ in range(50):
        t = Tournament.random(9, rng)
        path = max_transitive(t).witness
        ordering = hamiltonian_path(t, sorted(path))
        mask = 0
        for v in ordering:
            mask |= 1 << v
        scores = [(t.rows[v] & mask).bit_count() for v in ordering]
        assert scores == list(range(len(ordering) - 1, -1, -1))


def test_monochromatic_chain_pigeonhole():
    chi = all_red(4)
    indices, color = monochromatic_chain([0, 1, 2, 3], chi, 2)
    assert len(indices) == 2 and color is Color.RED

    chi = all_red(9)
    indices, color = monochromatic_chain(list(range(9)), chi, 3)
    assert indices == (0, 1, 2) and color is Color.RED


def test_monochromatic_chain_too_short():
    with pytest.raises(ValueError):
        monochromatic_chain([0, 1, 2], all_red(4), 2)


def test_monochromatic_chain_crafted_alternating():
    # pairs colored by parity of distance; verified against every index triple
    chi = GraphColoring2.from_function(
        9, lambda i, j: Color.RED if (j - i) % 2 else Color.BLUE
    )
    order = list(range(9))
    indices, color = monochromatic_chain(order, chi, 3)
    assert all(
        chi.color(order[a], order[b]) is color
        for a, b in zip(indices, indices[1:])
    )
    triples = [
        (a, b, c)
        for a, b, c in itertools.combinations(range(9), 3)
        if chi.color(a, b) == chi.color(b, c)
    ]
    assert triples, "oracle: a consecutive-monochromatic triple must exist"
    assert tuple(indices) in [t for t in triples] or len(indices) == 3


@settings(max_examples=60, deadline=None)
@given(st.integers(0, (1 << 36) - 1), st.integers(0, (1 << 36) - 1))
def test_monochromatic_chain_random(chi_bits, order_seed):
    chi = GraphColoring2.from_bits(9, chi_bits)
    order = list(range(9))
    random.Random(order_seed).shuffle(order)
    indices, color = monochromatic_chain(order, chi, 3)
    assert list(indices) == sorted(indices)
    assert all(
        chi.color(order[a], order[b]) is color
        for a, b in zip(indices, indices[1:])
    )


def test_max_transitive_examples():
    assert max_transitive(CYCLE3).value == 2
    result = max_transitive(Tournament.transitive(8))
    assert (result.value, result.status) == (8, "exact")


def test_max_transitive_budget_reports_lower_bound():
    rng = random.Random(0)
    t = Tournament.random(12, rng)
    result = max_transitive(t, node_budget=3)
    assert result.status == "lower_bound"
    assert result.value >= 1


def test_max_transitive_witness_is_transitive():
    rng = random.Random(1)
    for _ in range(30):
        t = Tournament.random(10, rng)
        result = max_transitive(t)
        assert is_transitive(t, result.witness)
        # maximality against brute force on a few sizes
        above = result.value + 1
        for subset in itertools.combinations(range(10), above):
            assert not is_transitive(t, subset)


def test_qr_tournament_examples():
    assert max_transitive(qr_tournament(7)).value == 3
    assert max_transitive(qr_tournament(11)).value == 4
    t3 = qr_tournament(3)
    assert not is_transitive(t3)


def test_qr_tournament_is_regular():
    for q in (3, 7, 11, 19):
        t = qr_tournament(q)
        assert all(t.outdegree(v) == (q - 1) // 2 for v in range(q))
        assert all(t.indegree(v) == (q - 1) // 2 for v in range(q))


def test_qr_tournament_rejects_bad_modulus():
    with pytest.raises(ValueError):
        qr_tournament(13)  # 13 = 1 mod 4
    with pytest.raises(ValueError):
        qr_tournament(9)


def test_paley_graph_small():
    chi = paley_graph(5)
    reds = {j for j in range(1, 5) if chi.color(0, j) is Color.RED}
    assert reds == {1, 4}
    with pytest.raises(ValueError):
        paley_graph(7)  # 3 mod 4
    with pytest.raises(ValueError):
        paley_graph(15)


def test_paley_13_red_clique_number():
    from hyperstep.oracle import max_mono_clique

    chi = paley_graph(13)
    result = max_mono_clique(chi.to_implicit(), Color.RED)
    assert (result.value, result.status) == (3, "exact")


def test_primes_and_residues():
    assert [p for p in range(2, 20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert quadratic_residues(7) == {1, 2, 4}


def test_subset_unrank_is_lexicographic():
    got = [subset_unrank(r, 5, 3) for r in range(10)]
    assert got == sorted(itertools.combinations(range(5), 3))


def test_frankl_wilson_small():
    chi = frankl_wilson_graph(2)
    assert chi.n == 56
    explicit = frankl_wilson_explicit(2)
    # red iff even intersection when p = 2
    a = subset_unrank(0, 8, 3)
    b = subset_unrank(1, 8, 3)
    overlap = len(set(a) & set(b))
    expected = Color.BLUE if overlap % 2 == 1 else Color.RED
    assert chi.color_of((0, 1)) is expected
    assert explicit.color(0, 1) is expected
    with pytest.raises(ValueError):
        frankl_wilson_graph(4)


def test_frankl_wilson_p2_clique_numbers():
    """Frozen from an exact run, cross-checked against networkx find_cliques."""
    from hyperstep.oracle import max_mono_clique

    networkx = pytest.importorskip("networkx")
    chi = frankl_wilson_explicit(2)
    red = max_mono_clique(chi.to_implicit(), Color.RED)
    assert (red.value, red.status) == (8, "exact")
    graph = networkx.Graph(
        (i, j)
        for i in range(chi.n)
        for j in range(i + 1, chi.n)
        if chi.color(i, j) is Color.RED
    )
    assert max(len(c) for c in networkx.find_cliques(graph)) == 8


def test_frankl_wilson_p3_is_implicit_only():
    chi = frankl_wilson_graph(3)
    assert chi.n == 2220075
    assert chi.color_of((0, 1)) in (Color.RED, Color.BLUE)
    with pytest.raises(ValueError):
        frankl_wilson_explicit(3)


def test_compute_T_small_values():
    assert compute_T(2, 4).value == 2
    assert compute_T(3, 8).value == 4


def test_compute_T_witness_probe():
    report = compute_T(5, 10)
    assert report.value is None
    assert report.witness is not None and report.witness.n == 10
    assert max_transitive(report.witness).value < 5


def test_compute_T_t3_matches_naive_enumeration():
    """Independent oracle: every 4-vertex tournament has a transitive triple."""
    pairs = list(itertools.combinations(range(4), 2))
    for bits in range(1 << 6):
        rows = [0] * 4
        for position, (i, j) in enumerate(pairs):
            if (bits >> position) & 1:
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
        t = Tournament(4, tuple(rows))
        assert any(
            is_transitive(t, triple)
            for triple in itertools.combinations(range(4), 3)
        )

"""Exact and probabilistic verification engines.

Monochromatic clique search and s-independence numbers run as deterministic
branch-and-bound with budgets expressed in search nodes (machine-independent),
returning an explicit exact / lower_bound status.  The deletion-method
independent-set routine and the seeded subset sampler cover the probabilistic
side.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Callable, Sequence, Union

from .seeds import derive_seed
from .structures import (
    Color,
    ExplicitColoring,
    ExplicitHypergraph,
    ImplicitColoring,
    ImplicitHypergraph,
)

ColoringLike = Union[ExplicitColoring, ImplicitColoring]
HypergraphLike = Union[ExplicitHypergraph, ImplicitHypergraph]

EXACT = "exact"
LOWER_BOUND = "lower_bound"
UPPER_BOUND = "upper_bound"


@dataclass(frozen=True)
class SearchResult:
    value: int
    witness: tuple[int, ...]
    status: str
    nodes: int
    wall_time: float


class _BudgetExceeded(Exception):
    pass


def _color_lookup(coloring: ColoringLike) -> Callable[[tuple[int, ...]], Color]:
    if isinstance(coloring, ExplicitColoring):
        return coloring.table.__getitem__
    return coloring.color_of


def max_mono_clique(
    coloring: ColoringLike, color: Color, node_budget: int | None = None
) -> SearchResult:
    """Largest vertex set all of whose k-subsets carry the given color.

    Exact when the search space is exhausted within the node budget, else the
    best incumbent with lower_bound status.  Sets smaller than k qualify
    vacuously, so the value is always at least min(n, k-1).
    """
    start = time.perf_counter()
    n, k = coloring.n, coloring.k
    if k == 2:
        adjacency = _pair_adjacency(coloring, color)
        value, witness, nodes, exact = _bitset_clique(n, adjacency, node_budget)
    else:
        value, witness, nodes, exact = _subset_clique(coloring, color, node_budget)
    return SearchResult(
        value=value,
        witness=witness,
        status=EXACT if exact else LOWER_BOUND,
        nodes=nodes,
        wall_time=time.perf_counter() - start,
    )


def _pair_adjacency(coloring: ColoringLike, color: Color) -> list[int]:
    lookup = _color_lookup(coloring)
    n = coloring.n
    adjacency = [0] * n
    for i, j in combinations(range(n), 2):
        if lookup((i, j)) == color:
            adjacency[i] |= 1 << j
            adjacency[j] |= 1 << i
    return adjacency


def _bitset_clique(
    n: int, adjacency: Sequence[int], node_budget: int | None
) -> tuple[int, tuple[int, ...], int, bool]:
    """Max clique over bitmask adjacency with a greedy-coloring bound."""
    best = 1 if n else 0
    best_set = 1 if n else 0
    nodes = 0
    exact = True

    def greedy_classes(mask: int) -> list[tuple[int, int]]:
        # (vertex, class number) with class numbers nondecreasing along the list
        out = []
        number = 0
        rest = mask
        while rest:
            number += 1
            pool = rest
            while pool:
                v = (pool & -pool).bit_length() - 1
                out.append((v, number))
                rest &= ~(1 << v)
                pool &= ~adjacency[v]
                pool &= ~(1 << v)
        return out

    def expand(current: int, size: int, cand: int) -> None:
        nonlocal best, best_set, nodes
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise _BudgetExceeded
        order = greedy_classes(cand)
        for v, bound in reversed(order):
            if size + bound <= best:
                return
            bit = 1 << v
            new = cand & adjacency[v]
            if size + 1 > best:
                best = size + 1
                best_set = current | bit
            if new:
                expand(current | bit, size + 1, new)
            cand &= ~bit

    try:
        if n:
            expand(0, 0, (1 << n) - 1)
    except _BudgetExceeded:
        exact = False
    witness = tuple(v for v in range(n) if (best_set >> v) & 1)
    return best, witness, nodes, exact


_ENUMERATE_LIMIT = 150_000


def _subset_clique(
    coloring: ColoringLike, color: Color, node_budget: int | None
) -> tuple[int, tuple[int, ...], int, bool]:
    """Branch and bound over vertex inclusion in increasing index order.

    The clique grows left to right, so a candidate w is always the maximum of
    the set it would join; when the universe is small enough to enumerate all
    k-subsets up front and the complement color is the rare one, misses are
    indexed by their maximum vertex and tested with mask arithmetic, otherwise
    each (k-1)-subset of the clique is checked against the color predicate.
    Either way the traversal, and hence the node count, is identical.
    """
    n, k = coloring.n, coloring.k
    lookup = _color_lookup(coloring)

    miss_by_max: list[list[int]] | None = None
    if comb(n, k) <= _ENUMERATE_LIMIT:
        misses = [s for s in combinations(range(n), k) if lookup(s) != color]
        if len(misses) * 3 <= comb(n, k):
            miss_by_max = [[] for _ in range(n)]
            for s in misses:
                mask = 0
                for v in s:
                    mask |= 1 << v
                miss_by_max[s[-1]].append(mask)

    if miss_by_max is not None:
        blockers = miss_by_max

        def extends(clique_mask: int, clique_len: int, w: int) -> bool:
            if clique_len < k - 1:
                return True
            outside = ~(clique_mask | (1 << w))
            for q in blockers[w]:
                if q & outside == 0:
                    return False
            return True

    else:
        cache: dict[tuple[int, ...], Color] = {}

        def extends(clique_mask: int, clique_len: int, w: int) -> bool:
            if clique_len < k - 1:
                return True
            for rest in combinations(path, k - 1):
                key = rest + (w,)
                got = cache.get(key)
                if got is None:
                    got = lookup(key)
                    cache[key] = got
                if got != color:
                    return False
            return True

    best = min(n, k - 1)
    best_clique: tuple[int, ...] = tuple(range(best))
    nodes = 0
    exact = True
    path: list[int] = []

    def expand(clique_mask: int, cands: list[int]) -> None:
        nonlocal best, best_clique, nodes
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise _BudgetExceeded
        if len(path) > best:
            best = len(path)
            best_clique = tuple(path)
        for i, v in enumerate(cands):
            if len(path) + len(cands) - i <= best:
                return
            path.append(v)
            new_mask = clique_mask | (1 << v)
            remaining = [
                w for w in cands[i + 1 :] if extends(new_mask, len(path), w)
            ]
            expand(new_mask, remaining)
            path.pop()

    try:
        expand(0, list(range(n)))
    except _BudgetExceeded:
        exact = False
    return best, best_clique, nodes, exact


def alpha_s(
    graph: HypergraphLike, s: int, node_budget: int | None = None
) -> SearchResult:
    """Largest vertex set containing no complete k-graph on s vertices."""
    start = time.perf_counter()
    if s < graph.k:
        raise ValueError("s must be at least the uniformity k")
    n, k = graph.n, graph.k
    is_edge = (
        graph.edges.__contains__
        if isinstance(graph, ExplicitHypergraph)
        else graph.is_edge
    )
    complete_cache: dict[tuple[int, ...], bool] = {}

    def complete(vertices: tuple[int, ...]) -> bool:
        got = complete_cache.get(vertices)
        if got is None:
            got = all(is_edge(e) for e in combinations(vertices, k))
            complete_cache[vertices] = got
        return got

    def admissible(chosen: list[int], v: int) -> bool:
        if len(chosen) < s - 1:
            return True
        for group in combinations(chosen, s - 1):
            if complete(tuple(sorted(group + (v,)))):
                return False
        return True

    best = min(n, s - 1)
    best_set: tuple[int, ...] = tuple(range(best))
    nodes = 0
    exact = True

    def expand(chosen: list[int], cands: list[int]) -> None:
        nonlocal best, best_set, nodes
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise _BudgetExceeded
        if len(chosen) > best:
            best = len(chosen)
            best_set = tuple(chosen)
        for i, v in enumerate(cands):
            if len(chosen) + len(cands) - i <= best:
                return
            if admissible(chosen, v):
                chosen.append(v)
                expand(chosen, cands[i + 1 :])
                chosen.pop()

    try:
        expand([], list(range(n)))
    except _BudgetExceeded:
        exact = False
    return SearchResult(
        value=best,
        witness=best_set,
        status=EXACT if exact else LOWER_BOUND,
        nodes=nodes,
        wall_time=time.perf_counter() - start,
    )


def spencer_bound(n: int, k: int, edge_count: int) -> float:
    """Guaranteed independent-set size for the deletion method."""
    p = (n / (k * edge_count)) ** (1.0 / (k - 1))
    return (1.0 - 1.0 / k) * n * p


def spencer_independent_set(
    graph: ExplicitHypergraph, seed: int, max_rounds: int = 10_000
) -> tuple[int, ...]:
    """Deletion method: sample vertices, break every surviving edge.

    Requires |E| > n/k.  Each vertex survives independently with probability
    p = (n / (k |E|))^(1/(k-1)); one vertex (the largest) is deleted from each
    edge still fully inside the sample.  Rounds repeat until the result
    reaches the guaranteed size, which happens in expectation.
    """
    n, k = graph.n, graph.k
    edge_count = len(graph.edges)
    if edge_count * k <= n:
        raise ValueError("deletion method requires |E| > n/k")
    p = (n / (k * edge_count)) ** (1.0 / (k - 1))
    target = spencer_bound(n, k, edge_count)
    edges = sorted(graph.edges)
    for round_index in range(max_rounds):
        rng = random.Random(derive_seed(seed, round_index))
        kept = {v for v in range(n) if rng.random() < p}
        for edge in edges:
            if all(v in kept for v in edge):
                kept.discard(max(edge))
        if len(kept) >= target:
            if any(all(v in kept for v in edge) for edge in edges):
                raise AssertionError("deletion pass left a complete edge")
            return tuple(sorted(kept))
    raise RuntimeError(
        f"deletion method failed to reach size {target:.2f} in {max_rounds} rounds"
    )


@dataclass(frozen=True)
class SampleTranscript:
    """Outcome of a seeded sampling run over uniform subsets."""

    universe: int
    subset_size: int
    trials: int
    seed: int
    violations: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def clean(self) -> bool:
        return not self.violations


def sample_verify(
    predicate: Callable[[tuple[int, ...]], bool],
    universe: int,
    subset_size: int,
    trials: int,
    seed: int,
) -> SampleTranscript:
    """Check a subset predicate on uniformly sampled ascending subsets.

    Every violation is recorded with its trial index and witness subset; the
    sample of trial i depends only on (seed, i).
    """
    if trials < 0:
        raise ValueError("trials must be non-negative")
    violations = []
    population = range(universe)
    for trial in range(trials):
        rng = random.Random(derive_seed(seed, trial))
        subset = tuple(sorted(rng.sample(population, subset_size)))
        if not predicate(subset):
            violations.append((trial, subset))
    return SampleTranscript(universe, subset_size, trials, seed, tuple(violations))

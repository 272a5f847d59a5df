"""Recursive hypergraph lift keyed on the local-extrema count.

A (k-1)-graph on N vertices lifts to a k-graph on 2^N vertices: a k-tuple
with monotone delta sequence is an edge iff its delta set is an edge of the
base; a non-monotone tuple is an edge iff its delta sequence has m local
extrema with m in {k-4, k-3}, equivalently at most one locally monotone
interior element.  Iterating the lift gives a tower of graphs, one
exponential jump in vertex count per level.

The two combinatorial devices the argument rests on live here as executable
operations: repairing a 7-vertex chain with 4 extrema down to 2 by deleting
one vertex, and extracting a (k+1)-vertex zigzag subchain with exactly k-2
extrema from any chain with at least k extrema.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .deltas import (
    VertexChain,
    delta,
    extrema_count,
    extrema_positions,
    is_monotone,
)
from .structures import ExplicitHypergraph, ImplicitHypergraph

HypergraphLike = Union[ExplicitHypergraph, ImplicitHypergraph]


def rogers_edge(base: HypergraphLike, tup: Iterable[int]) -> bool:
    """Edge rule of the lifted k-graph, k = base.k + 1 >= 7."""
    vs = tuple(tup)
    k = len(vs)
    if k < 7:
        raise ValueError("the edge rule needs k >= 7")
    if base.k != k - 1:
        raise ValueError(f"base must be {k - 1}-uniform, got {base.k}")
    if any(x >= y for x, y in zip(vs, vs[1:])):
        raise ValueError("vertices must be strictly increasing")
    if vs[0] < 0 or max(v.bit_length() for v in vs) > base.n:
        raise ValueError("universe mismatch: vertex does not fit in 2^N")
    ds = tuple(delta(x, y) for x, y in zip(vs, vs[1:]))
    if is_monotone(ds):
        return base.edge(tuple(sorted(ds)))
    return extrema_count(ds) in (k - 4, k - 3)


def lift_hypergraph(base: HypergraphLike) -> ImplicitHypergraph:
    if base.k + 1 < 7:
        raise ValueError("lifted uniformity must be at least 7")
    provenance = f"rogers-lift(k={base.k},n={base.n})"
    return ImplicitHypergraph(
        base.k + 1, 1 << base.n, lambda s: rogers_edge(base, s), provenance
    )


@dataclass(frozen=True)
class TowerStack:
    """Iterated lifts; level j has uniformity k0 + j and 2^(previous N) vertices."""

    levels: tuple[ImplicitHypergraph, ...]

    def __len__(self) -> int:
        return len(self.levels)

    @property
    def top(self) -> ImplicitHypergraph:
        return self.levels[-1]


def build_tower(base: HypergraphLike, depth: int) -> TowerStack:
    if depth < 0:
        raise ValueError("depth must be non-negative")
    level = (
        base.to_implicit() if isinstance(base, ExplicitHypergraph) else base
    )
    levels = [level]
    for _ in range(depth):
        level = lift_hypergraph(level)
        levels.append(level)
    return TowerStack(tuple(levels))


def repair_seven(chain: VertexChain) -> int:
    """Index of a vertex whose deletion drops the extrema count from 4 to 2.

    The chain must have 7 vertices and an alternating interior (4 extrema).
    The case split follows whether the second delta is a local minimum:
    delete the third vertex when the first delta dominates the third, the
    fifth otherwise; when the second delta is a local maximum, both subcases
    delete the fourth vertex.  Returns a 0-based position into the vertices.
    """
    if len(chain) != 7:
        raise ValueError("repair_seven needs a 7-vertex chain")
    ds = chain.deltas
    if extrema_count(ds) != 4:
        raise ValueError("chain must have exactly 4 local extrema")
    if ds[0] > ds[1]:  # second delta is a local minimum
        index = 2 if ds[0] > ds[2] else 4
    else:  # second delta is a local maximum
        index = 3
    if extrema_count(chain.drop(index).deltas) != 2:
        raise AssertionError("repair did not reach 2 extrema")
    return index


def zigzag_extract(chain: VertexChain, k: int) -> VertexChain:
    """(k+1)-vertex subchain whose delta sequence has exactly k-2 extrema.

    Takes the pairs around every other one of the first k extrema; the deltas
    bridging consecutive pairs recombine to the skipped extrema, so every
    interior position of the result is an extremum.  Four cases: first
    extremum a minimum or maximum, crossed with the parity of k.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    ds = chain.deltas
    extrema = extrema_positions(ds)
    if len(extrema) < k:
        raise ValueError(f"need at least {k} local extrema, found {len(extrema)}")
    first = extrema[:k]
    first_is_min = ds[first[0] - 1] > ds[first[0]]

    def pairs(positions: Sequence[int]) -> list[int]:
        out = []
        for p in positions:
            out.append(p)
            out.append(p + 1)
        return out

    if first_is_min:
        if k % 2 == 1:
            indices = pairs(first[0::2])
        else:
            indices = [0] + pairs(first[0:-1:2])
    else:
        if k % 2 == 1:
            indices = [0, 1] + pairs(first[1:-1:2])
        else:
            indices = [0] + pairs(first[1::2])
    result = chain.subchain(indices)
    if extrema_count(result.deltas) != k - 2:
        raise AssertionError("zigzag extraction missed the extrema target")
    return result

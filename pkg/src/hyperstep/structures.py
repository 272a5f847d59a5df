"""Coloring and hypergraph containers shared by the construction modules.

Explicit objects hold a full table over k-subsets of {0..n-1}; implicit ones
wrap a pure predicate so universes of size 2^N never get materialized.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Mapping


class Color(enum.Enum):
    RED = "R"
    BLUE = "B"


def check_subset(subset: tuple[int, ...], k: int, n: int) -> tuple[int, ...]:
    """Validate an ascending k-subset of {0..n-1}."""
    if len(subset) != k:
        raise ValueError(f"expected a {k}-subset, got {len(subset)} vertices")
    if any(x >= y for x, y in zip(subset, subset[1:])):
        raise ValueError("subset must be strictly increasing")
    if subset[0] < 0 or subset[-1] >= n:
        raise ValueError(f"vertices must lie in 0..{n - 1}")
    return subset


@dataclass(frozen=True)
class ExplicitColoring:
    """Total red/blue table over the k-subsets of {0..n-1}."""

    k: int
    n: int
    table: Mapping[tuple[int, ...], Color]

    def __post_init__(self) -> None:
        expected = comb(self.n, self.k)
        if len(self.table) != expected:
            raise ValueError(
                f"table has {len(self.table)} entries, expected {expected}"
            )
        for key in self.table:
            check_subset(key, self.k, self.n)

    def color(self, subset: Iterable[int]) -> Color:
        return self.table[tuple(subset)]

    def to_implicit(self, provenance: str = "explicit") -> "ImplicitColoring":
        return ImplicitColoring(self.k, self.n, self.table.__getitem__, provenance)

    @classmethod
    def from_function(
        cls, k: int, n: int, fn: Callable[[tuple[int, ...]], Color]
    ) -> "ExplicitColoring":
        return cls(k, n, {s: fn(s) for s in combinations(range(n), k)})

    @classmethod
    def uniform(cls, k: int, n: int, color: Color) -> "ExplicitColoring":
        return cls.from_function(k, n, lambda s: color)

    @classmethod
    def random(
        cls, k: int, n: int, rng: random.Random, red_probability: float = 0.5
    ) -> "ExplicitColoring":
        return cls.from_function(
            k,
            n,
            lambda s: Color.RED if rng.random() < red_probability else Color.BLUE,
        )


@dataclass(frozen=True)
class ImplicitColoring:
    """Pure red/blue predicate over k-subsets of {0..n-1}.

    ``color_of`` must be total and deterministic on ascending k-subsets; it is
    exposed raw for hot loops, while ``color`` validates its argument.
    """

    k: int
    n: int
    color_of: Callable[[tuple[int, ...]], Color]
    provenance: str = "anonymous"

    def color(self, subset: Iterable[int]) -> Color:
        return self.color_of(check_subset(tuple(subset), self.k, self.n))


@dataclass(frozen=True)
class ExplicitHypergraph:
    """k-graph given by its edge set (ascending k-tuples)."""

    k: int
    n: int
    edges: frozenset[tuple[int, ...]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        for edge in self.edges:
            check_subset(edge, self.k, self.n)

    def edge(self, subset: Iterable[int]) -> bool:
        return tuple(subset) in self.edges

    def to_implicit(self, provenance: str = "explicit") -> "ImplicitHypergraph":
        return ImplicitHypergraph(self.k, self.n, self.edges.__contains__, provenance)

    @classmethod
    def random(
        cls, k: int, n: int, rng: random.Random, edge_probability: float = 0.5
    ) -> "ExplicitHypergraph":
        edges = frozenset(
            e for e in combinations(range(n), k) if rng.random() < edge_probability
        )
        return cls(k, n, edges)

    @classmethod
    def complete(cls, k: int, n: int) -> "ExplicitHypergraph":
        return cls(k, n, frozenset(combinations(range(n), k)))


@dataclass(frozen=True)
class ImplicitHypergraph:
    """Pure edge predicate over k-subsets of {0..n-1}.

    n is an exact integer and may be astronomically large (2^N universes);
    only the predicate is ever evaluated.
    """

    k: int
    n: int
    is_edge: Callable[[tuple[int, ...]], bool]
    provenance: str = "anonymous"

    def edge(self, subset: Iterable[int]) -> bool:
        return self.is_edge(check_subset(tuple(subset), self.k, self.n))

"""Colorings with no red half-graph, and the first-moment machinery around them.

A k-half-graph sits on disjoint (k-1)-sets S and T: its edges are every
k-set S+{v} with v in T, plus one k-set T+{u} for an apex u in S.  Two
random constructions avoid red copies outright: for odd k, color a k-set red
iff it induces a regular subtournament of a fixed tournament; for even k,
red iff a fixed (k-1)-coloring of pairs restricts to a proper edge coloring
whose classes are perfect matchings.  Blue cliques are then controlled by a
union bound over the blocks of a partial Steiner system.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Mapping, Union

from . import oracle
from .formats import (
    STATUS_EXACT,
    STATUS_LOWER_BOUND,
    STATUS_ZERO_VIOLATION,
    Certificate,
    Claim,
)
from .seeds import derive_seed
from .structures import Color, ExplicitColoring, ImplicitColoring, check_subset
from .tourney import Tournament

ColoringLike = Union[ExplicitColoring, ImplicitColoring]


class SoundnessError(RuntimeError):
    """A structurally impossible red half-graph was found: implementation bug."""


@dataclass(frozen=True)
class HalfGraphPattern:
    """Witness of a half-graph copy: S, T, and the apex u in S."""

    s: tuple[int, ...]
    t: tuple[int, ...]
    apex: int

    def __post_init__(self) -> None:
        if len(self.s) != len(self.t):
            raise ValueError("S and T must have equal size")
        if set(self.s) & set(self.t):
            raise ValueError("S and T must be disjoint")
        if self.apex not in self.s:
            raise ValueError("apex must lie in S")

    def edges(self) -> list[tuple[int, ...]]:
        out = [tuple(sorted(self.s + (v,))) for v in self.t]
        out.append(tuple(sorted(self.t + (self.apex,))))
        return out


@dataclass(frozen=True)
class PairColoring:
    """Total coloring of pairs of {0..n-1} with colors 1..num_colors."""

    n: int
    num_colors: int
    table: Mapping[tuple[int, int], int]

    def __post_init__(self) -> None:
        if len(self.table) != comb(self.n, 2):
            raise ValueError("pair coloring must be total")
        for (i, j), value in self.table.items():
            if not 0 <= i < j < self.n:
                raise ValueError(f"bad pair ({i},{j})")
            if not 1 <= value <= self.num_colors:
                raise ValueError(f"color {value} out of range")

    def color(self, i: int, j: int) -> int:
        return self.table[(i, j) if i < j else (j, i)]

    @classmethod
    def random(cls, n: int, num_colors: int, rng: random.Random) -> "PairColoring":
        table = {
            pair: rng.randint(1, num_colors) for pair in combinations(range(n), 2)
        }
        return cls(n, num_colors, table)


def chi_odd(t: Tournament, subset: Iterable[int]) -> Color:
    """Red iff the induced subtournament is regular; k must be odd."""
    vs = tuple(subset)
    k = len(vs)
    if k % 2 == 0:
        raise ValueError("regular-tournament coloring needs odd k")
    check_subset(vs, k, t.n)
    mask = 0
    for v in vs:
        mask |= 1 << v
    half = (k - 1) // 2
    for v in vs:
        if (t.rows[v] & mask).bit_count() != half:
            return Color.BLUE
    return Color.RED


def chi_even(phi: PairColoring, subset: Iterable[int]) -> Color:
    """Red iff each vertex of the subset sees all k-1 colors; k must be even.

    Equivalent to the restriction being a proper edge coloring whose k-1
    classes are perfect matchings.
    """
    vs = tuple(subset)
    k = len(vs)
    if k % 2 == 1:
        raise ValueError("matching coloring needs even k")
    check_subset(vs, k, phi.n)
    for v in vs:
        seen = set()
        for w in vs:
            if w != v:
                seen.add(phi.color(v, w))
        if len(seen) != k - 1:
            return Color.BLUE
    return Color.RED


def regular_coloring(t: Tournament, k: int) -> ImplicitColoring:
    if k % 2 == 0:
        raise ValueError("regular-tournament coloring needs odd k")
    return ImplicitColoring(
        k, t.n, lambda s: chi_odd(t, s), provenance=f"halfgraph-odd(k={k},n={t.n})"
    )


def matching_coloring(phi: PairColoring, k: int) -> ImplicitColoring:
    if k % 2 == 1:
        raise ValueError("matching coloring needs even k")
    return ImplicitColoring(
        k, phi.n, lambda s: chi_even(phi, s), provenance=f"halfgraph-even(k={k},n={phi.n})"
    )


WITNESS = "witness"
EXHAUSTED = "exhausted"
BUDGET = "budget"


@dataclass(frozen=True)
class HalfGraphSearch:
    """Outcome of a red half-graph search.

    status: "witness" (red copy found), "exhausted" (full (S,T) space
    enumerated, none exists), or "budget" (sampling budget spent, none found).
    """

    witness: HalfGraphPattern | None
    status: str
    pairs_checked: int


def find_red_halfgraph(
    coloring: ColoringLike,
    max_pairs: int | None = None,
    seed: int = 0,
) -> HalfGraphSearch:
    """Search for an all-red half-graph copy in a k-uniform coloring.

    Exhaustive over ordered disjoint (S, T) pairs when max_pairs is None,
    else seeded uniform sampling of that many pairs.  The apex is
    existentially quantified over S.
    """
    k, n = coloring.k, coloring.n
    size = k - 1
    if n < 2 * size:
        return HalfGraphSearch(None, EXHAUSTED, 0)
    color = (
        coloring.table.__getitem__
        if isinstance(coloring, ExplicitColoring)
        else coloring.color_of
    )

    def apex_for(s: tuple[int, ...], t: tuple[int, ...]) -> int | None:
        for u in s:
            if color(tuple(sorted(t + (u,)))) == Color.RED:
                return u
        return None

    checked = 0
    if max_pairs is None:
        for s in combinations(range(n), size):
            inside = set(s)
            red_link = [
                v
                for v in range(n)
                if v not in inside and color(tuple(sorted(s + (v,)))) == Color.RED
            ]
            for t in combinations(red_link, size):
                checked += 1
                u = apex_for(s, t)
                if u is not None:
                    return HalfGraphSearch(
                        HalfGraphPattern(s, t, u), WITNESS, checked
                    )
        return HalfGraphSearch(None, EXHAUSTED, checked)

    for trial in range(max_pairs):
        rng = random.Random(derive_seed(seed, trial))
        s = tuple(sorted(rng.sample(range(n), size)))
        rest = [v for v in range(n) if v not in set(s)]
        t = tuple(sorted(rng.sample(rest, size)))
        checked += 1
        if all(color(tuple(sorted(s + (v,)))) == Color.RED for v in t):
            u = apex_for(s, t)
            if u is not None:
                return HalfGraphSearch(HalfGraphPattern(s, t, u), WITNESS, checked)
    return HalfGraphSearch(None, BUDGET, checked)


# ---------------------------------------------------------------------------
# partial Steiner packings and the first-moment estimate


@dataclass(frozen=True)
class SteinerPacking:
    """k-subsets of {0..n-1} covering every pair at most once."""

    n: int
    k: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen: set[tuple[int, int]] = set()
        for block in self.blocks:
            check_subset(block, self.k, self.n)
            for pair in combinations(block, 2):
                if pair in seen:
                    raise ValueError(f"pair {pair} covered twice")
                seen.add(pair)


def greedy_partial_steiner(n: int, k: int) -> SteinerPacking:
    """Lexicographic greedy packing: scan k-subsets in lex order, keep each
    whose pairs are all uncovered.

    Implemented as repeated first-fit search with covered-pair pruning, which
    visits exactly the subsets the plain scan would accept.
    """
    if not n >= k >= 2:
        raise ValueError("need n >= k >= 2")
    covered = [0] * n
    blocks: list[tuple[int, ...]] = []

    def first_open_block() -> tuple[int, ...] | None:
        prefix: list[int] = []

        def extend(start: int) -> tuple[int, ...] | None:
            if len(prefix) == k:
                return tuple(prefix)
            for v in range(start, n - (k - len(prefix)) + 1):
                if all(not (covered[u] >> v) & 1 for u in prefix):
                    prefix.append(v)
                    found = extend(v + 1)
                    if found:
                        return found
                    prefix.pop()
            return None

        return extend(0)

    while True:
        block = first_open_block()
        if block is None:
            break
        blocks.append(block)
        for u, v in combinations(block, 2):
            covered[u] |= 1 << v
            covered[v] |= 1 << u
    return SteinerPacking(n, k, tuple(blocks))


def default_blue_probability(k: int) -> Fraction:
    """Per-block probability that a block is red, for the two constructions."""
    if k % 2 == 1:
        return Fraction(1, 2 ** comb(k, 2))
    return Fraction(1, (k - 1) ** comb(k, 2))


def expected_blue_bound(
    k: int, n: int, blocks: int, q: Fraction | float | None = None
) -> int:
    """Largest N with C(N, n) * (1-q)^blocks < 1, evaluated exactly.

    q is the per-block red probability; with a partial Steiner system the
    blocks behave independently, so the expected number of all-blue n-sets is
    at most the left side.  Returns 0 when no N >= n satisfies the bound.
    """
    if n < k:
        raise ValueError("clique size n must be at least k")
    if blocks < 0:
        raise ValueError("block count must be non-negative")
    q = Fraction(q) if q is not None else default_blue_probability(k)
    if not 0 < q < 1:
        raise ValueError("q must lie strictly between 0 and 1")
    survive = 1 - q
    numerator = survive.numerator**blocks
    denominator = survive.denominator**blocks

    def holds(candidate: int) -> bool:
        return comb(candidate, n) * numerator < denominator

    if not holds(n):
        return 0
    low, high = n, 2 * n + 2
    while holds(high):
        low, high = high, 2 * high
    while high - low > 1:
        mid = (low + high) // 2
        if holds(mid):
            low = mid
        else:
            high = mid
    return low


# ---------------------------------------------------------------------------
# certificate search


def search_certificate(
    k: int,
    n: int,
    seed: int,
    trials: int,
    clique_budget: int = 500_000,
    halfgraph_pairs: int | None = None,
) -> Certificate:
    """Sample constructions, check red-half-graph freeness, bound blue cliques.

    Odd k draws random tournaments, even k random pair colorings; each trial
    owns the stream (seed, trial).  Any red half-graph is a hard failure, as
    the constructions cannot contain one.  Returns a certificate for the
    trial with the smallest blue clique bound.
    """
    if k < 3:
        raise ValueError("uniformity must be at least 3")
    family = "halfgraph-odd" if k % 2 == 1 else "halfgraph-even"
    cert = Certificate(
        family=family,
        params={"k": str(k), "n": str(n), "seed": str(seed), "trials": str(trials)},
    )
    cert.stamp()
    best: tuple[int, int, HalfGraphSearch, oracle.SearchResult] | None = None
    for trial in range(trials):
        rng = random.Random(derive_seed(seed, trial))
        if k % 2 == 1:
            coloring = regular_coloring(Tournament.random(n, rng), k)
        else:
            coloring = matching_coloring(PairColoring.random(n, k - 1, rng), k)
        search = find_red_halfgraph(
            coloring, max_pairs=halfgraph_pairs, seed=derive_seed(seed, trial, "hg")
        )
        if search.status == WITNESS:
            raise SoundnessError(
                f"construction soundness violated: red half-graph {search.witness}"
            )
        blue = oracle.max_mono_clique(coloring, Color.BLUE, clique_budget)
        if best is None or blue.value < best[1]:
            best = (trial, blue.value, search, blue)
    if best is not None:
        trial, _, search, blue = best
        cert.params["best.trial"] = str(trial)
        cert.claims.append(
            Claim(
                name="no-red-halfgraph",
                status=STATUS_ZERO_VIOLATION,
                value=0,
                budget=search.pairs_checked,
                seed=derive_seed(seed, trial, "hg"),
            )
        )
        cert.claims.append(
            Claim(
                name="blue-clique-number",
                status=STATUS_EXACT if blue.status == oracle.EXACT else STATUS_LOWER_BOUND,
                value=blue.value,
                budget=clique_budget,
                seed=derive_seed(seed, trial),
            )
        )
    return cert

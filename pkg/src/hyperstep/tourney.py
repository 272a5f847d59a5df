"""Tournaments, the coloring/tournament transform, and transitivity machinery.

A 2-coloring of K_N and an orientation of K_N carry the same information:
orient each red pair upward and each blue pair downward.  A transitive
subtournament then induces, through its unique Hamiltonian path and a
monotone-chain extraction, a monochromatic clique of roughly square-root
size, which is what makes clique-free colorings a source of tournaments
without large transitive subtournaments.

Explicit generators: Paley graphs, quadratic-residue tournaments, and the
set-intersection graph family over prime moduli.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from . import oracle
from .oracle import EXACT, LOWER_BOUND, SearchResult
from .structures import Color, ImplicitColoring


@dataclass(frozen=True)
class Tournament:
    """Orientation of K_n as row bitmasks: bit j of rows[i] set iff i beats j."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise ValueError("one row per vertex required")
        for i in range(self.n):
            if self.rows[i] >> self.n:
                raise ValueError("row bits out of range")
            if (self.rows[i] >> i) & 1:
                raise ValueError("no self edges")
            for j in range(i + 1, self.n):
                forward = (self.rows[i] >> j) & 1
                backward = (self.rows[j] >> i) & 1
                if forward + backward != 1:
                    raise ValueError(f"pair ({i},{j}) must be oriented exactly once")

    def beats(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def outdegree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def indegree(self, v: int) -> int:
        return self.n - 1 - self.outdegree(v)

    def reverse(self) -> "Tournament":
        full = (1 << self.n) - 1
        return Tournament(
            self.n, tuple((full & ~self.rows[v]) & ~(1 << v) for v in range(self.n))
        )

    def restrict(self, vertices: Sequence[int]) -> "Tournament":
        """Induced subtournament, relabeled to 0..m-1 in the given order."""
        vs = list(vertices)
        index = {v: i for i, v in enumerate(vs)}
        rows = []
        for v in vs:
            mask = 0
            for w in vs:
                if w != v and self.beats(v, w):
                    mask |= 1 << index[w]
            rows.append(mask)
        return Tournament(len(vs), tuple(rows))

    @classmethod
    def from_beats(cls, n: int, beats: Iterable[tuple[int, int]]) -> "Tournament":
        rows = [0] * n
        for i, j in beats:
            rows[i] |= 1 << j
        return cls(n, tuple(rows))

    @classmethod
    def transitive(cls, n: int) -> "Tournament":
        full = (1 << n) - 1
        return cls(n, tuple((full >> (v + 1)) << (v + 1) for v in range(n)))

    @classmethod
    def random(cls, n: int, rng: random.Random) -> "Tournament":
        rows = [0] * n
        for i, j in combinations(range(n), 2):
            if rng.random() < 0.5:
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
        return cls(n, tuple(rows))


@dataclass(frozen=True)
class GraphColoring2:
    """Red/blue coloring of the pairs of {0..n-1}; rows are symmetric bitmasks."""

    n: int
    red_rows: tuple[int, ...]

    def __post_init__(self) -> None:
        for i in range(self.n):
            if (self.red_rows[i] >> i) & 1:
                raise ValueError("no self pairs")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if ((self.red_rows[i] >> j) & 1) != ((self.red_rows[j] >> i) & 1):
                    raise ValueError("red assignment must be symmetric")

    def color(self, i: int, j: int) -> Color:
        if i == j:
            raise ValueError("pairs need two distinct vertices")
        return Color.RED if (self.red_rows[i] >> j) & 1 else Color.BLUE

    def color_of(self, pair: tuple[int, ...]) -> Color:
        return self.color(pair[0], pair[1])

    def to_implicit(self, provenance: str = "pairs") -> ImplicitColoring:
        return ImplicitColoring(2, self.n, self.color_of, provenance)

    def to_bits(self) -> int:
        """Pack the colors of pairs (i<j, lexicographic) into an integer, red=1."""
        bits = 0
        for position, (i, j) in enumerate(combinations(range(self.n), 2)):
            if (self.red_rows[i] >> j) & 1:
                bits |= 1 << position
        return bits

    @classmethod
    def from_bits(cls, n: int, bits: int) -> "GraphColoring2":
        rows = [0] * n
        for position, (i, j) in enumerate(combinations(range(n), 2)):
            if (bits >> position) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        return cls(n, tuple(rows))

    @classmethod
    def from_function(cls, n: int, fn) -> "GraphColoring2":
        rows = [0] * n
        for i, j in combinations(range(n), 2):
            if fn(i, j) == Color.RED:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        return cls(n, tuple(rows))

    @classmethod
    def random(cls, n: int, rng: random.Random) -> "GraphColoring2":
        return cls.from_function(
            n, lambda i, j: Color.RED if rng.random() < 0.5 else Color.BLUE
        )


def coloring_to_tournament(chi: GraphColoring2) -> Tournament:
    """Orient red pairs forward (small beats large) and blue pairs backward."""
    rows = [0] * chi.n
    for i, j in combinations(range(chi.n), 2):
        if chi.color(i, j) == Color.RED:
            rows[i] |= 1 << j
        else:
            rows[j] |= 1 << i
    return Tournament(chi.n, tuple(rows))


def tournament_to_coloring(t: Tournament) -> GraphColoring2:
    rows = [0] * t.n
    for i, j in combinations(range(t.n), 2):
        if t.beats(i, j):
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return GraphColoring2(t.n, tuple(rows))


def is_transitive(t: Tournament, vertices: Sequence[int] | None = None) -> bool:
    """True iff the induced subtournament is acyclic.

    Equivalent to its score sequence being a permutation of 0..m-1.
    """
    vs = list(range(t.n)) if vertices is None else list(vertices)
    mask = 0
    for v in vs:
        mask |= 1 << v
    seen = 0
    for v in vs:
        seen |= 1 << (t.rows[v] & mask).bit_count()
    return seen == (1 << len(vs)) - 1


def hamiltonian_path(t: Tournament, vertices: Sequence[int] | None = None) -> tuple[int, ...]:
    """The unique beating order of a transitive (sub)tournament.

    Sorting by induced outdegree descending; the outdegrees of a transitive
    m-set are exactly m-1,...,0, which certifies uniqueness.
    """
    vs = list(range(t.n)) if vertices is None else list(vertices)
    mask = 0
    for v in vs:
        mask |= 1 << v
    scored = sorted(((t.rows[v] & mask).bit_count(), v) for v in vs)
    if [s for s, _ in scored] != list(range(len(vs))):
        raise ValueError("induced subtournament is not transitive")
    return tuple(v for _, v in reversed(scored))


def monochromatic_chain(
    order: Sequence[int], chi: GraphColoring2, n: int
) -> tuple[tuple[int, ...], Color]:
    """Indices j_1 < ... < j_n whose consecutive pairs share one color.

    Dynamic program over (longest red chain ending here, longest blue chain
    ending here); among any n^2 positions one coordinate must reach n because
    the pairs (r_i, b_i) are pairwise distinct.
    """
    m = len(order)
    if n < 1:
        raise ValueError("chain length must be positive")
    if m < n * n:
        raise ValueError(f"need at least {n * n} vertices, got {m}")
    red_len = [1] * m
    blue_len = [1] * m
    red_prev = [-1] * m
    blue_prev = [-1] * m
    for i in range(m):
        for j in range(i):
            if chi.color(order[j], order[i]) == Color.RED:
                if red_len[j] + 1 > red_len[i]:
                    red_len[i] = red_len[j] + 1
                    red_prev[i] = j
            else:
                if blue_len[j] + 1 > blue_len[i]:
                    blue_len[i] = blue_len[j] + 1
                    blue_prev[i] = j
        for lengths, prevs, color in (
            (red_len, red_prev, Color.RED),
            (blue_len, blue_prev, Color.BLUE),
        ):
            if lengths[i] >= n:
                chain = []
                at = i
                while at >= 0 and len(chain) < n:
                    chain.append(at)
                    at = prevs[at]
                return tuple(reversed(chain)), color
    raise AssertionError("pigeonhole guarantees a chain of length n")


def max_transitive(t: Tournament, node_budget: int | None = None) -> SearchResult:
    """Largest transitive subtournament, by branch and bound.

    The prefix is explored in dominance order: after choosing a top vertex v,
    every later choice must lie in v's out-neighbourhood, so each transitive
    set is visited exactly once via its unique Hamiltonian path.  Candidates
    are tried in descending global outdegree; the bound is prefix size plus
    candidate count.
    """
    start = time.perf_counter()
    n = t.n
    order = sorted(range(n), key=lambda v: (-t.rows[v].bit_count(), v))
    best = 0
    best_path: tuple[int, ...] = ()
    nodes = 0
    exact = True
    path: list[int] = []

    class Budget(Exception):
        pass

    def expand(cands: int) -> None:
        nonlocal best, best_path, nodes
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise Budget
        if len(path) > best:
            best = len(path)
            best_path = tuple(path)
        # every set is reached once, through its unique dominance order, so a
        # vertex stays in cands after its branch: it may follow a later top
        for v in order:
            bit = 1 << v
            if not cands & bit:
                continue
            if len(path) + cands.bit_count() <= best:
                return
            path.append(v)
            expand(cands & t.rows[v])
            path.pop()

    try:
        expand((1 << n) - 1)
    except Budget:
        exact = False
    return SearchResult(
        value=best,
        witness=best_path,
        status=EXACT if exact else LOWER_BOUND,
        nodes=nodes,
        wall_time=time.perf_counter() - start,
    )


# ---------------------------------------------------------------------------
# explicit generators


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def quadratic_residues(q: int) -> frozenset[int]:
    """Nonzero quadratic residues modulo q."""
    return frozenset(x * x % q for x in range(1, q))


def paley_graph(q: int) -> GraphColoring2:
    """Red iff the difference is a nonzero quadratic residue mod q.

    Needs q prime with q = 1 (mod 4) so that -1 is a residue and the relation
    is symmetric.
    """
    if not is_prime(q) or q % 4 != 1:
        raise ValueError("q must be a prime congruent to 1 mod 4")
    residues = quadratic_residues(q)
    return GraphColoring2.from_function(
        q, lambda i, j: Color.RED if (i - j) % q in residues else Color.BLUE
    )


def qr_tournament(q: int) -> Tournament:
    """i beats j iff j - i is a quadratic residue mod q.

    Needs q prime with q = 3 (mod 4) so that exactly one of x, -x is a
    residue, making the orientation total and antisymmetric.
    """
    if not is_prime(q) or q % 4 != 3:
        raise ValueError("q must be a prime congruent to 3 mod 4")
    residues = quadratic_residues(q)
    rows = [0] * q
    for i in range(q):
        for j in range(q):
            if i != j and (j - i) % q in residues:
                rows[i] |= 1 << j
    return Tournament(q, tuple(rows))


def subset_unrank(rank: int, ground: int, size: int) -> tuple[int, ...]:
    """rank-th size-subset of {0..ground-1} in lexicographic order."""
    out = []
    lowest = 0
    remaining = size
    while remaining:
        for candidate in range(lowest, ground):
            block = comb(ground - candidate - 1, remaining - 1)
            if rank < block:
                out.append(candidate)
                lowest = candidate + 1
                remaining -= 1
                break
            rank -= block
        else:
            raise ValueError("rank out of range")
    return tuple(out)


def frankl_wilson_graph(p: int) -> ImplicitColoring:
    """Intersection-size pair coloring over (p^2-1)-subsets of a p^3 ground set.

    Vertices are the C(p^3, p^2-1) subsets in lexicographic order; a pair is
    red iff the intersection size is not congruent to -1 mod p.  Returned as
    an implicit pair coloring because the vertex count explodes already at
    p = 3; use frankl_wilson_explicit for small p.
    """
    if not is_prime(p):
        raise ValueError("p must be prime")
    ground = p**3
    size = p * p - 1
    n = comb(ground, size)
    cache: dict[int, frozenset[int]] = {}

    def member(v: int) -> frozenset[int]:
        got = cache.get(v)
        if got is None:
            got = frozenset(subset_unrank(v, ground, size))
            cache[v] = got
        return got

    def color_of(pair: tuple[int, ...]) -> Color:
        a, b = member(pair[0]), member(pair[1])
        return Color.BLUE if len(a & b) % p == p - 1 else Color.RED

    return ImplicitColoring(2, n, color_of, provenance=f"frankl-wilson(p={p})")


def frankl_wilson_explicit(p: int) -> GraphColoring2:
    implicit = frankl_wilson_graph(p)
    if implicit.n > 2000:
        raise ValueError("vertex count too large to materialize")
    return GraphColoring2.from_function(
        implicit.n, lambda i, j: implicit.color_of((i, j))
    )


# ---------------------------------------------------------------------------
# exhaustive computation of the least size forcing a transitive subtournament


@dataclass(frozen=True)
class TransitiveForcingReport:
    """Result of compute_T: value is None when the answer exceeds max_n."""

    n: int
    max_n: int
    value: int | None
    witness: Tournament | None


def _extensions_without_transitive(
    base_rows: tuple[int, ...], n: int
) -> list[tuple[int, ...]]:
    """Extensions of a counterexample by one vertex that stay counterexamples."""
    m = len(base_rows)
    survivors = []
    subsets = list(combinations(range(m), n - 1))
    for pattern in range(1 << m):
        new_rows = list(base_rows)
        for v in range(m):
            if not (pattern >> v) & 1:
                new_rows[v] |= 1 << m
        new_rows.append(pattern)
        candidate = Tournament(m + 1, tuple(new_rows))
        if all(
            not is_transitive(candidate, subset + (m,)) for subset in subsets
        ):
            survivors.append(candidate.rows)
    return survivors


def _base_counterexamples(m: int) -> list[tuple[int, ...]]:
    """All tournaments on m vertices, halved by fixing 0 -> 1 when possible.

    Edge reversal maps counterexamples to counterexamples and flips the (0,1)
    edge, so keeping only the 0-beats-1 representatives stays exhaustive.
    """
    if m == 0:
        return [()]
    pairs = list(combinations(range(m), 2))
    out = []
    for bits in range(1 << len(pairs)):
        rows = [0] * m
        for position, (i, j) in enumerate(pairs):
            if (bits >> position) & 1:
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
        if m >= 2 and not (rows[0] >> 1) & 1:
            continue
        out.append(tuple(rows))
    return out


def compute_T(
    n: int, max_n: int, level_cap: int = 2_000_000
) -> TransitiveForcingReport:
    """Least N <= max_n such that every N-vertex tournament contains a
    transitive subtournament on n vertices.

    Counterexamples are enumerated level by level: a tournament on N vertices
    without a transitive n-set restricts to one on N-1 vertices, so extending
    every counterexample by every orientation of one new vertex is exhaustive.
    The first empty level is the answer.  A quadratic-residue restriction is
    probed first: a witness at max_n settles the "> max_n" case immediately.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if max_n < n:
        raise ValueError("max_n must be at least n")

    for q in range(max_n, max_n + 80):
        if q % 4 == 3 and is_prime(q):
            probe = qr_tournament(q).restrict(range(max_n))
            if max_transitive(probe).value < n:
                return TransitiveForcingReport(n, max_n, None, probe)
            break

    level = _base_counterexamples(n - 1)
    witness = Tournament(n - 1, level[0]) if level else None
    for m in range(n, max_n + 1):
        next_level: list[tuple[int, ...]] = []
        for rows in level:
            next_level.extend(_extensions_without_transitive(rows, n))
            if len(next_level) > level_cap:
                raise RuntimeError(
                    f"counterexample level {m} exceeds cap {level_cap}"
                )
        if not next_level:
            return TransitiveForcingReport(n, max_n, m, witness)
        witness = Tournament(m, next_level[0])
        level = next_level
    return TransitiveForcingReport(n, max_n, None, witness)

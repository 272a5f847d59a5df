"""Stepping-up colorings: lift a coloring on M vertices to one on 2^M vertices.

The lifted color of an increasing tuple is read off its delta sequence.  When
the sequence is monotone the base coloring decides (on the delta set); the
non-monotone case is forced: always blue for the 4-uniform rule, and red
exactly when the second delta is a local maximum and the third a local
minimum for the higher-uniformity rule.

The extraction half of the argument is here too: a long chain whose tuples
are all one color yields a subchain with strictly monotone deltas, found by
repeatedly halving around the unique largest delta of the current window.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterable, Sequence, Union

from .deltas import VertexChain, delta, is_monotone
from .structures import Color, ExplicitColoring, ImplicitColoring

ColoringLike = Union[ExplicitColoring, ImplicitColoring]

WHITE = "white"
BLACK = "black"


def _delta_tuple(vertices: Sequence[int], universe_bits: int) -> tuple[int, ...]:
    if any(x >= y for x, y in zip(vertices, vertices[1:])):
        raise ValueError("vertices must be strictly increasing")
    if vertices[0] < 0:
        raise ValueError("vertices must be non-negative")
    ds = tuple(delta(x, y) for x, y in zip(vertices, vertices[1:]))
    if max(ds) >= universe_bits:
        raise ValueError(
            "delta outside base universe: vertex does not fit in the declared width"
        )
    return ds


def chi4(base: ColoringLike, quad: Iterable[int]) -> Color:
    """4-uniform lift of a 3-uniform base coloring.

    Monotone delta triple: the base's color of the delta set.  Otherwise blue.
    """
    if base.k != 3:
        raise ValueError("base coloring must be 3-uniform")
    vs = tuple(quad)
    if len(vs) != 4:
        raise ValueError("chi4 colors 4-tuples")
    ds = _delta_tuple(vs, base.n)
    if is_monotone(ds):
        return base.color(tuple(sorted(ds)))
    return Color.BLUE


def chik(base: ColoringLike, tup: Iterable[int]) -> Color:
    """k-uniform lift of a (k-1)-uniform base coloring, k >= 5.

    Monotone delta sequence: the base's color of the delta set.  Otherwise
    red iff the second delta is a local maximum and the third a local minimum.
    """
    vs = tuple(tup)
    k = len(vs)
    if k < 5:
        raise ValueError("chik needs k >= 5")
    if base.k != k - 1:
        raise ValueError(f"base must be {k - 1}-uniform, got {base.k}")
    ds = _delta_tuple(vs, base.n)
    if is_monotone(ds):
        return base.color(tuple(sorted(ds)))
    if ds[0] < ds[1] > ds[2] and ds[2] < ds[3]:
        return Color.RED
    return Color.BLUE


def lift(base: ColoringLike, mode: str) -> ImplicitColoring:
    """Wrap a base coloring into the implicit lifted coloring on 2^M vertices."""
    if mode == "theorem4":
        if base.k != 3:
            raise ValueError("theorem4 lift needs a 3-uniform base")
        k = 4
        rule = chi4
    elif mode == "lemmak":
        if base.k < 4:
            raise ValueError("lemmak lift needs a base of uniformity at least 4")
        k = base.k + 1
        rule = chik
    else:
        raise ValueError(f"unknown lift mode {mode!r}")
    provenance = f"{mode}(k={base.k},n={base.n})"
    return ImplicitColoring(k, 1 << base.n, lambda s: rule(base, s), provenance)


def extract_monotone_chain(chain: VertexChain, t: int) -> VertexChain:
    """Subchain of t+1 vertices whose deltas are strictly monotone.

    Greedy halving: 2t times, split the current window at its unique largest
    delta and keep whichever side holds at least half the vertices (the left
    side on ties).  A split that keeps the right side is labeled white, the
    left side black; t same-label splits recombine into a strictly decreasing
    (white) or strictly increasing (black) delta subchain.  White wins label
    ties.  For t = 0 the first two vertices are returned.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    n = len(chain)
    if n < 1 << (2 * t):
        raise ValueError(
            f"insufficient chain length: need at least {1 << (2 * t)} vertices"
        )
    if t == 0:
        return chain.subchain((0, 1))

    deltas = chain.deltas
    lo, hi = 0, n - 1  # current window of delta positions [lo, hi)
    picks: list[tuple[int, str]] = []
    for _ in range(2 * t):
        window = deltas[lo:hi]
        position = lo + window.index(max(window))
        left_size = position - lo + 1  # vertices lo..position
        window_size = hi - lo + 1
        if 2 * left_size >= window_size:
            picks.append((position, BLACK))
            hi = position
        else:
            picks.append((position, WHITE))
            lo = position + 1

    whites = [p for p, label in picks if label == WHITE]
    blacks = [p for p, label in picks if label == BLACK]
    if len(whites) >= len(blacks):
        chosen = whites[:t]
        indices = chosen + [chosen[-1] + 1]
    else:
        chosen = blacks[:t]
        indices = [chosen[-1], chosen[-1] + 1] + [p + 1 for p in reversed(chosen[:-1])]
    result = chain.subchain(indices)
    if not is_monotone(result.deltas):
        raise AssertionError("extracted deltas are not monotone")
    return result


def max_blue_clique_theorem4(base: ColoringLike) -> int:
    """Exact largest all-blue vertex set of the 4-uniform lift of a 3-uniform base.

    Exhaustive dynamic program over the recursive chain decomposition instead
    of vertex-by-vertex search: every subset of {0..2^M-1} splits uniquely at
    its largest delta d into a left and right block whose internal deltas are
    below d, and a crossing 4-tuple is red only when 3 vertices sit on one
    side (giving a monotone triple (x1,x2,d) or (d,y1,y2)).  A chain's whole
    interaction with future joins is therefore captured by three small masks:
    its realized pair deltas, its realized increasing delta pairs, and its
    realized decreasing delta pairs.  Pools of such interfaces, keyed by bit
    budget, stay in the low thousands at M = 5.
    """
    if base.k != 3:
        raise ValueError("the lift solver needs a 3-uniform base")
    m = base.n
    pair_index = {p: i for i, p in enumerate(combinations(range(m), 2))}
    forbidden = [0] * m
    for d in range(m):
        for x1, x2 in combinations(range(d), 2):
            if base.color((x1, x2, d)) == Color.RED:
                forbidden[d] |= 1 << pair_index[(x1, x2)]

    # interface: (realized deltas, increasing pairs, decreasing pairs) -> max size
    pool: dict[tuple[int, int, int], int] = {(0, 0, 0): 1}
    for d in range(m):
        entries = list(pool.items())
        cross = {}
        for (s, _, _), _ in entries:
            mask = 0
            for x in range(d):
                if (s >> x) & 1:
                    mask |= 1 << pair_index[(x, d)]
            cross[s] = mask
        merged = dict(pool)
        bit = 1 << d
        for (sl, incl, decl), size_l in entries:
            if incl & forbidden[d]:
                continue  # some left triple (x1,x2) would close a red 4-tuple
            add_inc = cross[sl]
            for (sr, incr, decr), size_r in entries:
                if decr & forbidden[d]:
                    continue
                key = (sl | sr | bit, incl | incr | add_inc, decl | decr | cross[sr])
                size = size_l + size_r
                if merged.get(key, 0) < size:
                    merged[key] = size
        pool = merged
    return max(pool.values())


# ---------------------------------------------------------------------------
# base colorings for desk-scale tests: found by search, checked by brute force


def has_mono_clique(coloring: ColoringLike, color: Color, size: int) -> bool:
    """Brute-force check for a monochromatic clique of the given size."""
    for subset in combinations(range(coloring.n), size):
        if all(
            coloring.color(edge) == color
            for edge in combinations(subset, coloring.k)
        ):
            return True
    return False


def iter_bases_without_red_k4(m: int) -> Iterable[ExplicitColoring]:
    """All 3-uniform colorings on m vertices with no red clique on 4 vertices."""
    triples = list(combinations(range(m), 3))
    quads = [
        tuple(combinations(q, 3)) for q in combinations(range(m), 4)
    ]
    for bits in range(1 << len(triples)):
        table = {
            triple: Color.RED if (bits >> i) & 1 else Color.BLUE
            for i, triple in enumerate(triples)
        }
        if any(all(table[t] == Color.RED for t in quad) for quad in quads):
            continue
        yield ExplicitColoring(3, m, table)


def random_base_without_red_clique(
    k: int, m: int, forbidden_size: int, rng: random.Random, red_probability: float = 0.4
) -> ExplicitColoring:
    """Random k-uniform coloring on m vertices avoiding a red clique by retry."""
    while True:
        base = ExplicitColoring.random(k, m, rng, red_probability)
        if not has_mono_clique(base, Color.RED, forbidden_size):
            return base

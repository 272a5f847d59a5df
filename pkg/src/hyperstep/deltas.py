"""Bit-difference calculus over strictly increasing integer chains.

The primitive ``delta(a, b)`` is the highest bit position at which the binary
expansions of a and b differ.  Two structural facts drive everything built on
top of it:

* adjacent differences along an increasing chain are never equal, and
* the difference between the endpoints of a chain equals the maximum of the
  consecutive differences (so every contiguous window of a genuine delta
  sequence attains its maximum at exactly one position).

Interior positions of a delta sequence are classified as local extrema or
locally monotone by strict comparison with both neighbours; the extrema count
is the quantity the lifted edge rules key on.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence


class Label(enum.Enum):
    ENDPOINT = "endpoint"
    LOCAL_MIN = "local_min"
    LOCAL_MAX = "local_max"
    LOCALLY_MONOTONE = "locally_monotone"


def delta(a: int, b: int) -> int:
    """Highest bit position where a and b differ.  Symmetric; a must differ from b."""
    if a == b:
        raise ValueError("delta undefined on equal vertices")
    if a < 0 or b < 0:
        raise ValueError("vertices must be non-negative integers")
    return (a ^ b).bit_length() - 1


@dataclass(frozen=True)
class VertexChain:
    """Strictly increasing vertices together with their delta sequence."""

    vertices: tuple[int, ...]
    deltas: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def subchain(self, indices: Sequence[int]) -> "VertexChain":
        """Chain induced by the given (increasing) positions of this chain."""
        return delta_sequence(self.vertices[i] for i in indices)

    def drop(self, index: int) -> "VertexChain":
        """Chain with one vertex removed; deltas recombine by the max rule."""
        kept = self.vertices[:index] + self.vertices[index + 1 :]
        return delta_sequence(kept)


def delta_sequence(vertices: Iterable[int]) -> VertexChain:
    """Build a validated chain from strictly increasing vertices.

    Raises ValueError when the input is too short, not strictly increasing,
    or (which cannot happen for genuine integer chains) the resulting delta
    sequence fails the unique-window-maximum property.
    """
    vs = tuple(vertices)
    if len(vs) < 2:
        raise ValueError("a chain needs at least two vertices")
    if any(x >= y for x, y in zip(vs, vs[1:])):
        raise ValueError("vertices must be strictly increasing")
    ds = tuple(delta(x, y) for x, y in zip(vs, vs[1:]))
    if any(x == y for x, y in zip(ds, ds[1:])):
        raise ValueError("adjacent deltas equal: chain invariant violated")
    if not is_realizable(ds):
        raise ValueError("repeated window maximum: chain invariant violated")
    return VertexChain(vs, ds)


@dataclass(frozen=True)
class DeltaClassification:
    """Per-position labels of a delta sequence plus its extrema count."""

    labels: tuple[Label, ...]
    extrema_count: int


def classify(deltas: Sequence[int]) -> DeltaClassification:
    """Label each interior position of a delta sequence.

    A position is a local minimum (maximum) when strictly below (above) both
    neighbours, and locally monotone when strictly between them.  The first
    and last positions lack a neighbour and stay unlabeled.  Adjacent entries
    must differ; non-adjacent repeats are fine.
    """
    ds = tuple(deltas)
    if len(ds) < 1:
        raise ValueError("empty delta sequence")
    if any(x == y for x, y in zip(ds, ds[1:])):
        raise ValueError("adjacent deltas must be distinct")
    labels = [Label.ENDPOINT] * len(ds)
    count = 0
    for i in range(1, len(ds) - 1):
        left, mid, right = ds[i - 1], ds[i], ds[i + 1]
        if left > mid < right:
            labels[i] = Label.LOCAL_MIN
            count += 1
        elif left < mid > right:
            labels[i] = Label.LOCAL_MAX
            count += 1
        else:
            labels[i] = Label.LOCALLY_MONOTONE
    return DeltaClassification(tuple(labels), count)


def extrema_count(deltas: Sequence[int]) -> int:
    """Number of interior local extrema; the hot-path subset of classify()."""
    count = 0
    for i in range(1, len(deltas) - 1):
        left, mid, right = deltas[i - 1], deltas[i], deltas[i + 1]
        if (left > mid) == (mid < right):
            count += 1
    return count


def extrema_positions(deltas: Sequence[int]) -> list[int]:
    """Positions of the interior local extrema, in order."""
    out = []
    for i in range(1, len(deltas) - 1):
        left, mid, right = deltas[i - 1], deltas[i], deltas[i + 1]
        if (left > mid) == (mid < right):
            out.append(i)
    return out


def is_monotone(deltas: Sequence[int]) -> bool:
    """True when the sequence is strictly increasing or strictly decreasing."""
    if len(deltas) <= 1:
        return True
    return all(x < y for x, y in zip(deltas, deltas[1:])) or all(
        x > y for x, y in zip(deltas, deltas[1:])
    )


def is_realizable(deltas: Sequence[int]) -> bool:
    """True iff every contiguous window attains its maximum exactly once."""
    ds = tuple(deltas)
    n = len(ds)
    for lo in range(n):
        top = -1
        hits = 0
        for hi in range(lo, n):
            v = ds[hi]
            if v > top:
                top, hits = v, 1
            elif v == top:
                hits += 1
            if hits != 1:
                return False
    return True


def realize_delta_sequence(deltas: Sequence[int]) -> VertexChain:
    """Lexicographically minimal increasing chain with the given delta sequence.

    Splits recursively at the unique window maximum: the left block keeps that
    bit at 0, the right block at 1, and both recurse on their own windows.
    """
    ds = tuple(deltas)
    if not ds:
        raise ValueError("need at least one delta")
    if any(d < 0 for d in ds):
        raise ValueError("deltas are bit positions and must be non-negative")
    if not is_realizable(ds):
        raise ValueError("delta sequence is not realizable")
    return delta_sequence(_realize(ds))


def _realize(ds: tuple[int, ...]) -> list[int]:
    if not ds:
        return [0]
    top = max(ds)
    split = ds.index(top)
    left = _realize(ds[:split])
    right = _realize(ds[split + 1 :])
    high = 1 << top
    return left + [high + r for r in right]

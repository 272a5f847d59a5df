"""Deterministic seed derivation for reproducible sampling streams.

Every randomized trial owns its own stream keyed by (root seed, trial index,
optional salt), so results do not depend on scheduling or call order, and the
derivation is stable across platforms and Python versions.
"""

from __future__ import annotations

import hashlib
import random


def derive_seed(*parts: object) -> int:
    """64-bit seed derived from the given parts via SHA-256."""
    text = "/".join(str(p) for p in parts)
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def stream(*parts: object) -> random.Random:
    """Fresh RNG for the stream named by the given parts."""
    return random.Random(derive_seed(*parts))

"""Flat key-value run configuration with strict key checking."""

from __future__ import annotations

from dataclasses import dataclass, fields
from pathlib import Path


@dataclass
class RunConfig:
    """Settings shared by CLI commands; every field has a default.

    Files use one ``key=value`` per line with '#' comments; unknown keys are
    rejected so typos fail loudly.
    """

    seed: int = 0
    node_budget: int = 2_000_000
    trial_budget: int = 100_000
    pair_budget: int = 200_000
    level_cap: int = 2_000_000
    workers: int = 1
    out_dir: str = "."

    @classmethod
    def load(cls, path: str | Path) -> "RunConfig":
        known = {f.name: f.type for f in fields(cls)}
        values: dict[str, object] = {}
        for raw in Path(path).read_text().splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            key = key.strip().replace("-", "_")
            if not sep:
                raise ValueError(f"bad config line: {raw!r}")
            if key not in known:
                raise ValueError(f"unknown config key: {key!r}")
            values[key] = value.strip() if key == "out_dir" else int(value)
        return cls(**values)

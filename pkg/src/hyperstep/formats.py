"""Line-oriented text formats and certificate persistence.

All formats share one shape: a versioned header line, then one record per
line.  '#' starts a comment and blank lines are ignored.

    KGC 1 k=<k> n=<N>    v1 v2 ... vk R|B     every ascending k-subset once
    HGR 1 k=<k> n=<N>    v1 v2 ... vk         one edge per line
    TRN 1 n=<N>          i j                  i beats j, one line per pair
    DSC 1                family= / param.<key>= / base.digest= lines
    CERT 1               descriptor lines, then claim= lines

A certificate records a construction descriptor, the tool version and
timestamp, and one claim per verification run with enough data (budget,
seed) to re-run it.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from datetime import datetime, timezone
from itertools import combinations
from pathlib import Path

from .structures import Color, ExplicitColoring, ExplicitHypergraph
from .tourney import GraphColoring2, Tournament

TOOL_VERSION = "0.1.0"

STATUS_EXACT = "exact"
STATUS_LOWER_BOUND = "lower_bound"
STATUS_ZERO_VIOLATION = "zero-violation"


def content_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def file_digest(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _header_fields(line: str, kind: str, count: int) -> list[str]:
    parts = line.split()
    if len(parts) != 2 + count or parts[0] != kind or parts[1] != "1":
        raise ValueError(f"bad {kind} header: {line!r}")
    values = []
    for part in parts[2:]:
        key, _, value = part.partition("=")
        values.append(value)
    return values


# ---------------------------------------------------------------------------
# KGC: explicit k-uniform colorings


def write_kgc(coloring: ExplicitColoring) -> str:
    lines = [f"KGC 1 k={coloring.k} n={coloring.n}"]
    for subset in combinations(range(coloring.n), coloring.k):
        lines.append(
            " ".join(str(v) for v in subset) + f" {coloring.table[subset].value}"
        )
    return "\n".join(lines) + "\n"


def parse_kgc(text: str) -> ExplicitColoring:
    lines = content_lines(text)
    if not lines:
        raise ValueError("empty KGC input")
    k_text, n_text = _header_fields(lines[0], "KGC", 2)
    k, n = int(k_text), int(n_text)
    table: dict[tuple[int, ...], Color] = {}
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != k + 1:
            raise ValueError(f"bad KGC record: {line!r}")
        subset = tuple(int(p) for p in parts[:k])
        if subset in table:
            raise ValueError(f"duplicate subset {subset}")
        table[subset] = Color(parts[k])
    return ExplicitColoring(k, n, table)


# ---------------------------------------------------------------------------
# HGR: explicit hypergraphs


def write_hgr(graph: ExplicitHypergraph) -> str:
    lines = [f"HGR 1 k={graph.k} n={graph.n}"]
    for edge in sorted(graph.edges):
        lines.append(" ".join(str(v) for v in edge))
    return "\n".join(lines) + "\n"


def parse_hgr(text: str) -> ExplicitHypergraph:
    lines = content_lines(text)
    if not lines:
        raise ValueError("empty HGR input")
    k_text, n_text = _header_fields(lines[0], "HGR", 2)
    k, n = int(k_text), int(n_text)
    edges = set()
    for line in lines[1:]:
        edge = tuple(int(p) for p in line.split())
        if len(edge) != k:
            raise ValueError(f"bad HGR record: {line!r}")
        edges.add(edge)
    return ExplicitHypergraph(k, n, frozenset(edges))


# ---------------------------------------------------------------------------
# TRN: tournaments


def write_trn(t: Tournament) -> str:
    lines = [f"TRN 1 n={t.n}"]
    for i, j in combinations(range(t.n), 2):
        lines.append(f"{i} {j}" if t.beats(i, j) else f"{j} {i}")
    return "\n".join(lines) + "\n"


def parse_trn(text: str) -> Tournament:
    lines = content_lines(text)
    if not lines:
        raise ValueError("empty TRN input")
    (n_text,) = _header_fields(lines[0], "TRN", 1)
    n = int(n_text)
    beats = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad TRN record: {line!r}")
        beats.append((int(parts[0]), int(parts[1])))
    return Tournament.from_beats(n, beats)


# ---------------------------------------------------------------------------
# DSC: descriptors for implicit constructions


@dataclass(frozen=True)
class Descriptor:
    family: str
    params: dict[str, str] = field(default_factory=dict)
    base_digest: str = ""


def write_descriptor(descriptor: Descriptor) -> str:
    lines = ["DSC 1", f"family={descriptor.family}"]
    for key in sorted(descriptor.params):
        lines.append(f"param.{key}={descriptor.params[key]}")
    if descriptor.base_digest:
        lines.append(f"base.digest={descriptor.base_digest}")
    return "\n".join(lines) + "\n"


def parse_descriptor(text: str) -> Descriptor:
    lines = content_lines(text)
    if not lines or lines[0].split() != ["DSC", "1"]:
        raise ValueError("bad DSC header")
    family = ""
    params: dict[str, str] = {}
    digest = ""
    for line in lines[1:]:
        key, _, value = line.partition("=")
        if key == "family":
            family = value
        elif key.startswith("param."):
            params[key[len("param.") :]] = value
        elif key == "base.digest":
            digest = value
        else:
            raise ValueError(f"unknown DSC line: {line!r}")
    if not family:
        raise ValueError("descriptor lacks a family")
    return Descriptor(family, params, digest)


# ---------------------------------------------------------------------------
# CERT: verification certificates


@dataclass(frozen=True)
class Claim:
    name: str
    status: str
    value: int
    budget: int
    seed: int

    def line(self) -> str:
        return (
            f"claim={self.name} status={self.status} value={self.value}"
            f" budget={self.budget} seed={self.seed}"
        )

    @property
    def conclusive(self) -> bool:
        return self.status in (STATUS_EXACT, STATUS_ZERO_VIOLATION)


@dataclass
class Certificate:
    family: str
    params: dict[str, str] = field(default_factory=dict)
    base_digest: str = ""
    claims: list[Claim] = field(default_factory=list)
    version: str = TOOL_VERSION
    timestamp: str = ""

    def stamp(self) -> None:
        self.timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")


def write_cert(cert: Certificate) -> str:
    lines = ["CERT 1", f"family={cert.family}"]
    for key in sorted(cert.params):
        lines.append(f"param.{key}={cert.params[key]}")
    if cert.base_digest:
        lines.append(f"base.digest={cert.base_digest}")
    lines.append(f"version={cert.version}")
    if cert.timestamp:
        lines.append(f"timestamp={cert.timestamp}")
    for claim in cert.claims:
        lines.append(claim.line())
    return "\n".join(lines) + "\n"


def parse_cert(text: str) -> Certificate:
    lines = content_lines(text)
    if not lines or lines[0].split() != ["CERT", "1"]:
        raise ValueError("bad CERT header")
    cert = Certificate(family="")
    for line in lines[1:]:
        if line.startswith("claim="):
            fields = dict(part.split("=", 1) for part in line.split())
            cert.claims.append(
                Claim(
                    name=fields["claim"],
                    status=fields["status"],
                    value=int(fields["value"]),
                    budget=int(fields["budget"]),
                    seed=int(fields["seed"]),
                )
            )
            continue
        key, _, value = line.partition("=")
        if key == "family":
            cert.family = value
        elif key.startswith("param."):
            cert.params[key[len("param.") :]] = value
        elif key == "base.digest":
            cert.base_digest = value
        elif key == "version":
            cert.version = value
        elif key == "timestamp":
            cert.timestamp = value
        else:
            raise ValueError(f"unknown CERT line: {line!r}")
    if not cert.family:
        raise ValueError("certificate lacks a family")
    return Certificate(
        family=cert.family,
        params=cert.params,
        base_digest=cert.base_digest,
        claims=cert.claims,
        version=cert.version,
        timestamp=cert.timestamp,
    )

"""Command-line surface: build constructions, verify claims, compute T(n).

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget
exhausted without an exact status.
"""

from __future__ import annotations

import argparse
import random
import sys
from itertools import combinations
from pathlib import Path

from . import formats, halfgraph, oracle, rogers, stepup, tourney
from .config import RunConfig
from .formats import (
    STATUS_EXACT,
    STATUS_LOWER_BOUND,
    STATUS_ZERO_VIOLATION,
    Certificate,
    Claim,
    Descriptor,
)
from .seeds import derive_seed
from .structures import Color, ExplicitColoring

OK = 0
FAILED = 1
USAGE = 2
EXHAUSTED = 3


def entrypoint() -> None:
    sys.exit(main(sys.argv[1:]))


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = RunConfig.load(args.config) if args.config else RunConfig()
    if args.seed is not None:
        config.seed = args.seed
    try:
        return args.handler(args, config)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE
    except RuntimeError as err:
        print(f"budget exhausted: {err}", file=sys.stderr)
        return EXHAUSTED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperstep",
        description="stepping-up constructions and their verification oracles",
    )
    parser.add_argument("--config", help="key=value settings file")
    parser.add_argument("--seed", type=int, default=None, help="override config seed")
    commands = parser.add_subparsers(dest="command", required=True)

    build = commands.add_parser("build", help="write a construction file")
    families = build.add_subparsers(dest="family", required=True)

    paley = families.add_parser("paley")
    paley.add_argument("--q", type=int, required=True)
    paley.add_argument("--out", default=None)
    paley.set_defaults(handler=cmd_build_paley)

    qr = families.add_parser("qr-tournament")
    qr.add_argument("--q", type=int, required=True)
    qr.add_argument("--out", default=None)
    qr.set_defaults(handler=cmd_build_qr)

    fw = families.add_parser("frankl-wilson")
    fw.add_argument("--p", type=int, required=True)
    fw.add_argument("--out", default=None)
    fw.set_defaults(handler=cmd_build_frankl_wilson)

    for name in ("stepup4", "stepupk"):
        sub = families.add_parser(name)
        sub.add_argument("--base", required=True, help="KGC file of the base coloring")
        sub.add_argument("--out", default=None)
        sub.set_defaults(handler=cmd_build_stepup, family=name)

    rg = families.add_parser("rogers")
    rg.add_argument("--base", required=True, help="HGR file of the base hypergraph")
    rg.add_argument("--depth", type=int, default=1)
    rg.add_argument("--out", default=None)
    rg.set_defaults(handler=cmd_build_rogers)

    for name, parity in (("halfgraph-odd", 1), ("halfgraph-even", 0)):
        sub = families.add_parser(name)
        sub.add_argument("--k", type=int, required=True)
        sub.add_argument("--n", type=int, required=True)
        sub.add_argument("--out", default=None)
        sub.set_defaults(handler=cmd_build_halfgraph, parity=parity)

    verify = commands.add_parser("verify", help="run an oracle and certify the claim")
    checks = verify.add_subparsers(dest="check", required=True)

    noclique = checks.add_parser("no-clique")
    noclique.add_argument("input")
    noclique.add_argument("--color", choices=["red", "blue"], required=True)
    noclique.add_argument("--size", type=int, required=True)
    noclique.add_argument("--cert", default=None)
    noclique.set_defaults(handler=cmd_verify_no_clique)

    alpha = checks.add_parser("alpha")
    alpha.add_argument("input")
    alpha.add_argument("--s", type=int, required=True)
    alpha.add_argument("--cert", default=None)
    alpha.set_defaults(handler=cmd_verify_alpha)

    nohg = checks.add_parser("no-halfgraph")
    nohg.add_argument("input")
    nohg.add_argument("--sample-pairs", type=int, default=None)
    nohg.add_argument("--cert", default=None)
    nohg.set_defaults(handler=cmd_verify_no_halfgraph)

    maxtrans = checks.add_parser("max-transitive")
    maxtrans.add_argument("input")
    maxtrans.add_argument("--cert", default=None)
    maxtrans.set_defaults(handler=cmd_verify_max_transitive)

    theorem5 = checks.add_parser("theorem5")
    theorem5.add_argument("--exhaustive-N", dest="exhaustive_n", type=int, required=True)
    theorem5.add_argument("--cert", default=None)
    theorem5.set_defaults(handler=cmd_verify_theorem5)

    tn = commands.add_parser("compute-t", help="least N forcing a transitive n-set")
    tn.add_argument("--n", type=int, required=True)
    tn.add_argument("--max-N", dest="max_n", type=int, required=True)
    tn.set_defaults(handler=cmd_compute_t)

    return parser


# ---------------------------------------------------------------------------
# build commands


def _write(path: Path, text: str) -> None:
    path.write_text(text)
    print(f"wrote {path}")


def cmd_build_paley(args, config: RunConfig) -> int:
    chi = tourney.paley_graph(args.q)
    coloring = ExplicitColoring.from_function(
        2, chi.n, lambda s: chi.color(s[0], s[1])
    )
    out = Path(args.out or f"paley{args.q}.kgc")
    _write(out, formats.write_kgc(coloring))
    return OK


def cmd_build_qr(args, config: RunConfig) -> int:
    t = tourney.qr_tournament(args.q)
    out = Path(args.out or f"qr{args.q}.trn")
    _write(out, formats.write_trn(t))
    return OK


def cmd_build_frankl_wilson(args, config: RunConfig) -> int:
    implicit = tourney.frankl_wilson_graph(args.p)
    if implicit.n <= 2000:
        chi = tourney.frankl_wilson_explicit(args.p)
        coloring = ExplicitColoring.from_function(
            2, chi.n, lambda s: chi.color(s[0], s[1])
        )
        out = Path(args.out or f"fw{args.p}.kgc")
        _write(out, formats.write_kgc(coloring))
    else:
        descriptor = Descriptor("frankl-wilson", {"p": str(args.p), "n": str(implicit.n)})
        out = Path(args.out or f"fw{args.p}.dsc")
        _write(out, formats.write_descriptor(descriptor))
    return OK


def cmd_build_stepup(args, config: RunConfig) -> int:
    base_path = Path(args.base)
    base = formats.parse_kgc(base_path.read_text())
    mode = "theorem4" if args.family == "stepup4" else "lemmak"
    lifted = stepup.lift(base, mode)  # validates uniformity
    descriptor = Descriptor(
        args.family,
        {
            "base": str(base_path),
            "k": str(lifted.k),
            "n": str(lifted.n),
        },
        base_digest=formats.file_digest(base_path),
    )
    out = Path(args.out or base_path.with_suffix(f".{args.family}.dsc").name)
    _write(out, formats.write_descriptor(descriptor))
    return OK


def cmd_build_rogers(args, config: RunConfig) -> int:
    base_path = Path(args.base)
    base = formats.parse_hgr(base_path.read_text())
    tower = rogers.build_tower(base, args.depth)  # validates thresholds
    descriptor = Descriptor(
        "rogers",
        {
            "base": str(base_path),
            "depth": str(args.depth),
            "k": str(tower.top.k),
        },
        base_digest=formats.file_digest(base_path),
    )
    out = Path(args.out or base_path.with_suffix(".rogers.dsc").name)
    _write(out, formats.write_descriptor(descriptor))
    return OK


def cmd_build_halfgraph(args, config: RunConfig) -> int:
    if args.k % 2 != args.parity:
        raise ValueError(
            f"uniformity {args.k} has the wrong parity for this construction"
        )
    rng = random.Random(derive_seed(config.seed, "halfgraph"))
    if args.parity:
        coloring = halfgraph.regular_coloring(
            tourney.Tournament.random(args.n, rng), args.k
        )
        stem = f"halfgraph-odd-k{args.k}-n{args.n}"
    else:
        coloring = halfgraph.matching_coloring(
            halfgraph.PairColoring.random(args.n, args.k - 1, rng), args.k
        )
        stem = f"halfgraph-even-k{args.k}-n{args.n}"
    explicit = ExplicitColoring.from_function(
        coloring.k, coloring.n, coloring.color_of
    )
    out = Path(args.out or f"{stem}.kgc")
    _write(out, formats.write_kgc(explicit))
    return OK


# ---------------------------------------------------------------------------
# verify commands


def _load_coloring(path: Path):
    """KGC file or descriptor of an implicit coloring."""
    text = path.read_text()
    head = formats.content_lines(text)[0].split()[0]
    if head == "KGC":
        return formats.parse_kgc(text), formats.file_digest(path)
    if head == "DSC":
        descriptor = formats.parse_descriptor(text)
        return _coloring_from_descriptor(descriptor), descriptor.base_digest
    raise ValueError(f"expected a KGC or DSC input, got {head!r}")


def _coloring_from_descriptor(descriptor: Descriptor):
    if descriptor.family in ("stepup4", "stepupk"):
        base_path = Path(descriptor.params["base"])
        if not base_path.exists():
            raise ValueError(f"base file {base_path} not found")
        if descriptor.base_digest and formats.file_digest(base_path) != descriptor.base_digest:
            raise ValueError("base file digest mismatch")
        base = formats.parse_kgc(base_path.read_text())
        mode = "theorem4" if descriptor.family == "stepup4" else "lemmak"
        return stepup.lift(base, mode)
    if descriptor.family == "frankl-wilson":
        return tourney.frankl_wilson_graph(int(descriptor.params["p"]))
    raise ValueError(f"descriptor family {descriptor.family!r} is not a coloring")


def _load_hypergraph(path: Path):
    text = path.read_text()
    head = formats.content_lines(text)[0].split()[0]
    if head == "HGR":
        return formats.parse_hgr(text), formats.file_digest(path)
    if head == "DSC":
        descriptor = formats.parse_descriptor(text)
        if descriptor.family != "rogers":
            raise ValueError(f"descriptor family {descriptor.family!r} is not a hypergraph")
        base_path = Path(descriptor.params["base"])
        if not base_path.exists():
            raise ValueError(f"base file {base_path} not found")
        if descriptor.base_digest and formats.file_digest(base_path) != descriptor.base_digest:
            raise ValueError("base file digest mismatch")
        base = formats.parse_hgr(base_path.read_text())
        tower = rogers.build_tower(base, int(descriptor.params["depth"]))
        return tower.top, descriptor.base_digest
    raise ValueError(f"expected an HGR or DSC input, got {head!r}")


def _append_claim(
    cert_path: Path, family: str, params: dict[str, str], digest: str, claim: Claim
) -> None:
    if cert_path.exists():
        cert = formats.parse_cert(cert_path.read_text())
    else:
        cert = Certificate(family=family, params=params, base_digest=digest)
        cert.stamp()
    cert.claims.append(claim)
    cert_path.write_text(formats.write_cert(cert))
    print(f"certificate: {cert_path}")


def cmd_verify_no_clique(args, config: RunConfig) -> int:
    path = Path(args.input)
    coloring, digest = _load_coloring(path)
    color = Color.RED if args.color == "red" else Color.BLUE
    result = oracle.max_mono_clique(coloring, color, config.node_budget)
    status = STATUS_EXACT if result.status == oracle.EXACT else STATUS_LOWER_BOUND
    claim = Claim(
        name=f"no-{args.color}-clique-{args.size}",
        status=status,
        value=result.value,
        budget=config.node_budget,
        seed=config.seed,
    )
    _append_claim(
        Path(args.cert or path.name + ".cert"),
        family="no-clique",
        params={"input": str(path), "color": args.color, "size": str(args.size)},
        digest=digest,
        claim=claim,
    )
    print(
        f"max {args.color} clique: {result.value} ({status}, {result.nodes} nodes)"
    )
    if result.value >= args.size:
        print(f"FAIL: {args.color} clique of size {result.value} >= {args.size}")
        return FAILED
    if status != STATUS_EXACT:
        return EXHAUSTED
    print(f"holds: no {args.color} clique of size {args.size}")
    return OK


def cmd_verify_alpha(args, config: RunConfig) -> int:
    path = Path(args.input)
    graph, digest = _load_hypergraph(path)
    result = oracle.alpha_s(graph, args.s, config.node_budget)
    status = STATUS_EXACT if result.status == oracle.EXACT else STATUS_LOWER_BOUND
    claim = Claim(
        name=f"alpha-{args.s}",
        status=status,
        value=result.value,
        budget=config.node_budget,
        seed=config.seed,
    )
    _append_claim(
        Path(args.cert or path.name + ".cert"),
        family="alpha",
        params={"input": str(path), "s": str(args.s)},
        digest=digest,
        claim=claim,
    )
    print(f"alpha_{args.s} = {result.value} ({status}, {result.nodes} nodes)")
    return OK if status == STATUS_EXACT else EXHAUSTED


def cmd_verify_no_halfgraph(args, config: RunConfig) -> int:
    path = Path(args.input)
    coloring, digest = _load_coloring(path)
    search = halfgraph.find_red_halfgraph(
        coloring, max_pairs=args.sample_pairs, seed=config.seed
    )
    claim = Claim(
        name="no-red-halfgraph",
        status=STATUS_ZERO_VIOLATION if search.witness is None else STATUS_EXACT,
        value=0 if search.witness is None else 1,
        budget=search.pairs_checked,
        seed=config.seed,
    )
    _append_claim(
        Path(args.cert or path.name + ".cert"),
        family="no-halfgraph",
        params={"input": str(path)},
        digest=digest,
        claim=claim,
    )
    if search.witness is not None:
        print(f"FAIL: red half-graph found: {search.witness}")
        return FAILED
    if search.status == halfgraph.EXHAUSTED:
        print(f"holds: no red half-graph ({search.pairs_checked} pairs, exhaustive)")
        return OK
    print(f"no red half-graph in {search.pairs_checked} sampled pairs")
    return EXHAUSTED


def cmd_verify_max_transitive(args, config: RunConfig) -> int:
    path = Path(args.input)
    t = formats.parse_trn(path.read_text())
    result = tourney.max_transitive(t, config.node_budget)
    status = STATUS_EXACT if result.status == oracle.EXACT else STATUS_LOWER_BOUND
    claim = Claim(
        name="max-transitive",
        status=status,
        value=result.value,
        budget=config.node_budget,
        seed=config.seed,
    )
    _append_claim(
        Path(args.cert or path.name + ".cert"),
        family="max-transitive",
        params={"input": str(path)},
        digest=formats.file_digest(path),
        claim=claim,
    )
    print(f"max transitive subtournament: {result.value} ({status})")
    return OK if status == STATUS_EXACT else EXHAUSTED


def cmd_verify_theorem5(args, config: RunConfig) -> int:
    n = args.exhaustive_n
    if n < 2 or n > 6:
        raise ValueError("exhaustive check supported for 2 <= N <= 6")
    checked = 0
    for bits in range(1 << (n * (n - 1) // 2)):
        chi = tourney.GraphColoring2.from_bits(n, bits)
        m = max(
            _max_pair_clique(chi, Color.RED), _max_pair_clique(chi, Color.BLUE)
        )
        t = tourney.coloring_to_tournament(chi)
        value = tourney.max_transitive(t).value
        if value > (m + 1) ** 2 - 1:
            print(f"FAIL: coloring {bits} has transitive {value} > {(m+1)**2 - 1}")
            return FAILED
        checked += 1
    claim = Claim(
        name=f"transform-bound-N{n}",
        status=STATUS_ZERO_VIOLATION,
        value=0,
        budget=checked,
        seed=config.seed,
    )
    _append_claim(
        Path(args.cert or f"theorem5-N{n}.cert"),
        family="theorem5",
        params={"N": str(n)},
        digest="",
        claim=claim,
    )
    print(f"holds: all {checked} colorings satisfy the transform bound")
    return OK


def _max_pair_clique(chi: tourney.GraphColoring2, color: Color) -> int:
    best = 1
    for size in range(2, chi.n + 1):
        found = False
        for subset in combinations(range(chi.n), size):
            if all(chi.color(i, j) == color for i, j in combinations(subset, 2)):
                found = True
                break
        if not found:
            break
        best = size
    return best


def cmd_compute_t(args, config: RunConfig) -> int:
    report = tourney.compute_T(args.n, args.max_n, level_cap=config.level_cap)
    if report.value is None:
        print(f"T({args.n}) > {args.max_n}")
        if report.witness is not None:
            print(
                f"witness: {report.witness.n}-vertex tournament with no"
                f" transitive {args.n}-subtournament"
            )
    else:
        print(f"T({args.n}) = {report.value}")
        if report.witness is not None:
            print(
                f"witness: {report.witness.n}-vertex tournament with no"
                f" transitive {args.n}-subtournament"
            )
    return OK

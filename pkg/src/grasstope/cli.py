"""Command-line interface.

Verbs: `matroid check|analyze|graph`, `grass pluecker|moment|smooth|split`,
`verify theorem-b|theorem-1-6|lemmas`. Every verb writes a byte-stable
report to stdout (text by default, one-line JSON with --format json);
diagnostics go to stderr. Exit status: 0 success, 1 domain error, 2
usage or file-format error, 3 verification counterexample found.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import census, grassmann
from .classify import classify
from .matroid import (
    ConsistencyError,
    FormatError,
    matroid,
    parse_matroid_text,
    subset_elements,
    validate_exchange,
)
from .polytope import dimension, edges, vertex_graph

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_COUNTEREXAMPLE = 3


def _emit(line: str) -> None:
    sys.stdout.write(line + "\n")


def _emit_json(record: dict) -> None:
    sys.stdout.write(json.dumps(record) + "\n")


def _fmt_block(elements) -> str:
    return "{" + ",".join(map(str, elements)) + "}"


def _fmt_vertex(elements) -> str:
    return " ".join(map(str, elements))


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


# ---------------------------------------------------------------- matroid --

def _cmd_matroid_check(args) -> int:
    n, k, bases = parse_matroid_text(_read(args.file))
    report = validate_exchange(n, k, bases)
    if args.format == "json":
        record = {"valid": report.valid, "n": n, "k": k, "basis_count": len(bases)}
        if report.counterexample is None:
            record["counterexample"] = None
        else:
            bi, bj, elem = report.counterexample
            record["counterexample"] = {"I": list(bi), "J": list(bj), "i": elem}
        _emit_json(record)
    elif report.valid:
        _emit(f"valid: n={n} k={k}, {len(bases)} bases")
    else:
        bi, bj, elem = report.counterexample
        _emit(
            f"invalid: exchange fails for I={_fmt_block(bi)}, J={_fmt_block(bj)}, i={elem}"
        )
    return EXIT_OK if report.valid else EXIT_DOMAIN


def _factor_records(decomposition) -> list[dict]:
    return [
        {"elements": list(f.elements), "rank": f.rank, "kind": f.kind}
        for f in decomposition.factors
    ]


def _cmd_matroid_analyze(args) -> int:
    n, k, bases = parse_matroid_text(_read(args.file))
    m = matroid(n, k, bases)
    dim = dimension(m)
    edge_count = len(edges(m))
    verdict = classify(m)
    if args.format == "json":
        record = {
            "n": n,
            "k": k,
            "dim": dim,
            "vertex_count": len(m.bases),
            "edge_count": edge_count,
            "simple": verdict.simple,
            "factors": _factor_records(verdict.decomposition) if verdict.simple else None,
            "witness": None if verdict.simple else list(subset_elements(verdict.witness)),
        }
        _emit_json(record)
        return EXIT_OK
    head = f"dim {dim}, {len(m.bases)} vertices, {edge_count} edges"
    if verdict.simple:
        parts = " x ".join(
            f"{_fmt_block(f.elements)} rank {f.rank} {f.kind}"
            for f in verdict.decomposition.factors
        )
        _emit(f"{head}, simple, product {parts}")
    else:
        _emit(f"{head}, not simple, witness {_fmt_vertex(subset_elements(verdict.witness))}")
    return EXIT_OK


def _cmd_matroid_graph(args) -> int:
    n, k, bases = parse_matroid_text(_read(args.file))
    m = matroid(n, k, bases)
    try:
        base = tuple(int(p) for p in args.basis.split(","))
    except ValueError:
        raise FormatError(f"--basis expects comma-separated integers, got {args.basis!r}")
    graph = vertex_graph(m, base)
    forest = graph.is_forest()
    if args.format == "json":
        _emit_json(
            {
                "basis": sorted(base),
                "edges": [[i, j] for i, j in graph.edges],
                "forest": forest,
            }
        )
        return EXIT_OK
    _emit(
        f"vertex {_fmt_vertex(sorted(base))}: {len(graph.edges)} edges, "
        f"forest {'yes' if forest else 'no'}"
    )
    for i, j in graph.edges:
        _emit(f"edge {i} {j}")
    return EXIT_OK


# ------------------------------------------------------------------ grass --

def _cmd_grass_pluecker(args) -> int:
    a = grassmann.parse_matrix(_read(args.file))
    p = grassmann.pluecker(a)
    if args.format == "json":
        _emit_json(
            {
                "n": a.n,
                "k": a.k,
                "minors": [
                    {"rows": list(subset_elements(mask)), "value": str(val)}
                    for mask, val in p.minors.items()
                ],
            }
        )
        return EXIT_OK
    for mask, val in p.minors.items():
        _emit(f"P[{_fmt_vertex(subset_elements(mask))}] = {val}")
    return EXIT_OK


def _cmd_grass_moment(args) -> int:
    a = grassmann.parse_matrix(_read(args.file))
    point = grassmann.moment_map(a)
    if args.format == "json":
        _emit_json({"coords": [str(c) for c in point.coords]})
        return EXIT_OK
    _emit("mu = (" + ", ".join(str(c) for c in point.coords) + ")")
    return EXIT_OK


def _orbit_product(report: grassmann.SmoothnessReport) -> str:
    sizes = [
        len(f.elements)
        for f in report.decomposition.factors
        if f.rank not in (0, len(f.elements))
    ]
    if not sizes:
        return "point"
    return " x ".join(f"P^{size - 1}" for size in sizes)


def _cmd_grass_smooth(args) -> int:
    a = grassmann.parse_matrix(_read(args.file))
    report = grassmann.smoothness(a)
    if args.format == "json":
        record: dict = {"verdict": report.verdict, "simple": report.simple}
        if report.simple:
            record["orbit"] = _orbit_product(report)
            record["factors"] = [
                {
                    "elements": list(f.elements),
                    "rank": f.rank,
                    "kind": f.kind,
                    "orbit": desc,
                }
                for f, desc in zip(report.decomposition.factors, report.orbit_factors)
            ]
            record["witness"] = None
        else:
            record["orbit"] = None
            record["factors"] = None
            record["witness"] = list(subset_elements(report.witness))
        _emit_json(record)
        return EXIT_OK
    if report.simple:
        blocks = ", ".join(
            f"{_fmt_block(f.elements)} rank {f.rank}" for f in report.decomposition.factors
        )
        _emit(f"smooth: {_orbit_product(report)}; blocks {blocks}")
    else:
        _emit(
            "singular: support not simple; witness "
            f"{_fmt_vertex(subset_elements(report.witness))}"
        )
    return EXIT_OK


def _matrix_lines(rows) -> list[str]:
    return [" ".join(str(e) for e in row) for row in rows]


def _cmd_grass_split(args) -> int:
    a = grassmann.parse_matrix(_read(args.file))
    from .matroid import components

    decomp = components(grassmann.support_matroid(grassmann.pluecker(a)))
    split = grassmann.block_diagonalize(a, decomp)
    if args.format == "json":
        _emit_json(
            {
                "blocks": [
                    {"elements": list(elems), "rank": rank} for elems, rank in split.blocks
                ],
                "g": [[str(e) for e in row] for row in split.transform],
                "B": [[str(e) for e in row] for row in split.result.rows],
            }
        )
        return EXIT_OK
    blocks = ", ".join(f"{_fmt_block(elems)} rank {rank}" for elems, rank in split.blocks)
    _emit(f"blocks: {blocks}")
    _emit("g =")
    for line in _matrix_lines(split.transform):
        _emit(line)
    _emit("B =")
    for line in _matrix_lines(split.result.rows):
        _emit(line)
    return EXIT_OK


# ----------------------------------------------------------------- verify --

_VERIFY_CAPS = {
    "theorem-b": census.EXHAUST_MAX_N,
    "theorem-1-6": census.EXHAUST_MAX_N,
    "lemmas": census.PROMOTION_MAX_N,
}
_VERIFY_FNS = {
    "theorem-b": census.verify_simple_product,
    "theorem-1-6": census.verify_adjacent_nonsimple,
    "lemmas": census.verify_vertex_promotion,
}


def _report_record(report: census.VerificationReport) -> dict:
    return {
        "name": report.name,
        "n_max": report.n_max,
        "matroids_checked": report.matroids_checked,
        "simple_count": report.simple_count,
        "nk_counts": [[n, k, c] for n, k, c in report.nk_counts],
        "counterexamples": list(report.counterexamples),
    }


def _cmd_verify(args) -> int:
    report = _VERIFY_FNS[args.theorem](
        args.n, shards=args.shards, shard_index=args.shard_index, jobs=args.jobs
    )
    if args.out:
        Path(args.out).write_text(json.dumps(_report_record(report)) + "\n", encoding="utf-8")
    if args.format == "json":
        _emit_json(_report_record(report))
    else:
        _emit(f"{report.name}: ground sets up to n={report.n_max}")
        _emit("  n  k   matroids")
        for n, k, count in report.nk_counts:
            _emit(f"{n:>3} {k:>2} {count:>10}")
        _emit(
            f"checked {report.matroids_checked} matroids, {report.simple_count} simple, "
            f"counterexamples {len(report.counterexamples)}"
        )
        for ce in report.counterexamples:
            _emit(f"counterexample: {ce}")
    print(f"elapsed {report.elapsed:.2f}s", file=sys.stderr)
    return EXIT_COUNTEREXAMPLE if report.counterexamples else EXIT_OK


# ------------------------------------------------------------------ wiring --

def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grasstope",
        description=(
            "Exact matroid polytope combinatorics and smoothness of torus "
            "orbit closures in Grassmannians."
        ),
    )
    top = parser.add_subparsers(dest="group", required=True)

    mat = top.add_parser("matroid", help="operate on matroid files").add_subparsers(
        dest="verb", required=True
    )
    p = mat.add_parser("check", help="validate the exchange axiom")
    p.add_argument("file")
    _add_format(p)
    p.set_defaults(handler=_cmd_matroid_check)
    p = mat.add_parser("analyze", help="dimension, counts, simplicity, factors")
    p.add_argument("file")
    _add_format(p)
    p.set_defaults(handler=_cmd_matroid_analyze)
    p = mat.add_parser("graph", help="swap graph at one vertex")
    p.add_argument("file")
    p.add_argument("--basis", required=True, help="comma-separated elements, e.g. 1,2")
    _add_format(p)
    p.set_defaults(handler=_cmd_matroid_graph)

    grass = top.add_parser("grass", help="operate on matrix files").add_subparsers(
        dest="verb", required=True
    )
    for verb, handler, blurb in (
        ("pluecker", _cmd_grass_pluecker, "all k x k minors"),
        ("moment", _cmd_grass_moment, "moment-map image"),
        ("smooth", _cmd_grass_smooth, "smoothness of the torus orbit closure"),
        ("split", _cmd_grass_split, "block-diagonalize along the computed blocks"),
    ):
        p = grass.add_parser(verb, help=blurb)
        p.add_argument("file")
        _add_format(p)
        p.set_defaults(handler=handler)

    ver = top.add_parser("verify", help="exhaustive small-instance verifiers")
    sub = ver.add_subparsers(dest="theorem", required=True)
    for theorem, blurb in (
        ("theorem-b", "simple polytopes factor into admissible uniform blocks"),
        ("theorem-1-6", "simple vertices have non-simple neighbors of degree >= n"),
        ("lemmas", "balanced swaps of size 1 and 2 behave as the swap graph says"),
    ):
        p = sub.add_parser(theorem, help=blurb)
        p.add_argument("--n", type=int, required=True, help="largest ground set size")
        p.add_argument("--shards", type=int, default=1, help="split the scan range")
        p.add_argument("--shard-index", type=int, default=None, help="run one shard only")
        p.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
        p.add_argument("--out", default=None, help="also write the JSON report here")
        _add_format(p)
        p.set_defaults(handler=_cmd_verify)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "theorem", None) is not None:
        cap = _VERIFY_CAPS[args.theorem]
        if not 1 <= args.n <= cap:
            print(f"error: --n must be in 1..{cap} for {args.theorem}", file=sys.stderr)
            return EXIT_USAGE
        if args.shards < 1 or (
            args.shard_index is not None and not 0 <= args.shard_index < args.shards
        ):
            print("error: bad --shards/--shard-index combination", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.handler(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())

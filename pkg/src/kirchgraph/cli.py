"""Command-line front end.

Subcommands: enumerate, verify, tile, render, fundamental,
min-multiplicity.  Matrix files hold whitespace-separated rationals
(``p/q`` or integers), one row per line, ``#`` comments.  Exit codes:
0 success, 2 malformed input, 3 degenerate matrix, 4 node-limit
truncation, 5 missing embedding in a tile expression.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from kirchgraph.document import build_document, document_to_json, parse_document
from kirchgraph.enumerator import SearchConfig, enumerate_kirchhoff, min_multiplicity
from kirchgraph.exactalg import RowSystemError, build_row_system
from kirchgraph.render import render_dot, render_svg
from kirchgraph.tiling import (
    DEFAULT_COEFF_BOUND,
    NoEmbeddingAtOffset,
    Placement,
    TilingExpression,
    fundamental_sets,
    is_prime,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_TRUNCATED = 4
EXIT_NO_EMBEDDING = 5


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def parse_matrix_text(text: str):
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([_rational(tok) for tok in line.split()])
        except ValueError as exc:
            raise CliError(f"line {lineno}: {exc}", EXIT_PARSE) from exc
    if not rows:
        raise CliError("matrix file holds no rows", EXIT_PARSE)
    return rows


def _rational(tok: str):
    from fractions import Fraction

    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational {tok!r}") from exc


def _load_system(path: str):
    try:
        rows = parse_matrix_text(Path(path).read_text())
    except OSError as exc:
        raise CliError(str(exc), EXIT_PARSE) from exc
    try:
        return build_row_system(rows)
    except RowSystemError as exc:
        raise CliError(f"degenerate matrix: {exc}", EXIT_DEGENERATE) from exc
    except ValueError as exc:
        raise CliError(f"bad matrix: {exc}", EXIT_PARSE) from exc


def _load_document(path: str):
    try:
        return parse_document(Path(path).read_text())
    except (OSError, ValueError, KeyError) as exc:
        raise CliError(f"bad document: {exc}", EXIT_PARSE) from exc


TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coeff>\d+)\s*\*\s*)?(?P<ref>G\d+)"
    r"(?:@\(\s*(?P<off>-?\d+(?:\s*,\s*-?\d+)*)\s*\))?\s*"
)


def parse_expression(text: str, graphs_by_id: dict, k: int) -> TilingExpression:
    placements = []
    pos = 0
    first = True
    while pos < len(text):
        match = TERM_RE.match(text, pos)
        if not match or match.end() == pos:
            raise CliError(f"cannot parse expression at: {text[pos:]!r}", EXIT_PARSE)
        sign_tok = match.group("sign")
        if first and sign_tok == "-":
            raise CliError("expression cannot start with a subtraction", EXIT_PARSE)
        if not first and sign_tok is None:
            raise CliError(f"missing +/- before {match.group('ref')}", EXIT_PARSE)
        sign = -1 if sign_tok == "-" else 1
        coeff = int(match.group("coeff") or 1)
        ref = match.group("ref")
        if ref not in graphs_by_id:
            raise CliError(f"unknown graph reference {ref}", EXIT_PARSE)
        if match.group("off"):
            offset = tuple(int(x) for x in match.group("off").split(","))
            if len(offset) != k:
                raise CliError(f"offset {offset} needs {k} coordinates", EXIT_PARSE)
        else:
            offset = (0,) * k
        placements.extend(
            Placement(graphs_by_id[ref], offset, sign) for _ in range(coeff)
        )
        pos = match.end()
        first = False
    if not placements:
        raise CliError("empty expression", EXIT_PARSE)
    return TilingExpression(tuple(placements))


def _write_or_print(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# -- subcommands ----------------------------------------------------------


def cmd_enumerate(args) -> int:
    system = _load_system(args.matrix)
    config = SearchConfig(
        m_max=args.m_max,
        prune_negative_sum=not args.no_negative_sum_prune,
        cut_order=args.cut_order,
        node_limit=args.node_limit,
        workers=args.workers,
    )
    graphs, stats = enumerate_kirchhoff(system, config)
    primality = None
    if args.classify_prime:
        primality = {i: is_prime(g).status for i, g in enumerate(graphs)}
    doc = build_document(
        system, graphs, m_max=args.m_max, complete=stats.complete, primality=primality
    )
    summary = doc["summary"]
    line = f"{summary['total']} graphs; {summary['self_chiral']} self-chiral; {summary['chiral_pairs']} chiral pairs"
    if primality is not None:
        line += f"; {summary['primes']} prime"
    if not stats.complete:
        line += " (INCOMPLETE: node limit hit)"
    print(line)
    if args.out:
        Path(args.out).write_text(document_to_json(doc))
    return EXIT_OK if stats.complete else EXIT_TRUNCATED


def cmd_verify(args) -> int:
    _, graphs, doc = _load_document(args.doc)
    all_ok = True
    for entry, graph in zip(doc["graphs"], graphs):
        verdict = graph.is_kirchhoff()
        detail = ""
        if verdict.status == "bad_vertex":
            detail = f" at vertex {verdict.vertex} with cut {verdict.cut}"
        elif verdict.status == "bad_cycle":
            detail = f" with cycle vector {verdict.cycle}"
        elif verdict.status == "cycle_space_deficient":
            detail = f" (rank {verdict.rank_found} of {verdict.rank_required})"
        print(f"{entry['id']}: {verdict.status}{detail}")
        if verdict.status not in ("ok", "trivial"):
            all_ok = False
    return EXIT_OK if all_ok else 1


def cmd_tile(args) -> int:
    system, graphs, doc = _load_document(args.doc)
    graphs_by_id = {entry["id"]: g for entry, g in zip(doc["graphs"], graphs)}
    expr = parse_expression(args.expression, graphs_by_id, system.k)
    try:
        result = expr.evaluate()
    except NoEmbeddingAtOffset as exc:
        print(f"tile failed: {exc}", file=sys.stderr)
        return EXIT_NO_EMBEDDING
    primality = None
    if args.check_prime and not result.is_empty:
        primality = {0: is_prime(result).status}
    out_doc = build_document(system, [result], primality=primality)
    verdict = result.is_kirchhoff().status
    mult = result.multiplicity()
    line = f"result: {verdict}; m = {mult.m if mult.uniform else 'non-uniform'}"
    if primality:
        line += f"; {primality[0]}"
    print(line)
    if args.out:
        Path(args.out).write_text(document_to_json(out_doc))
    return EXIT_OK


def cmd_render(args) -> int:
    system, graphs, doc = _load_document(args.doc)
    if system.k > 2:
        print(
            "warning: k > 2, projecting onto the first two coordinates",
            file=sys.stderr,
        )
    if args.ids is None:
        selected = [e["id"] for e in doc["graphs"]]
    else:
        selected = [s for s in args.ids.split(",") if s]
    by_id = {entry["id"]: g for entry, g in zip(doc["graphs"], graphs)}
    outdir = Path(args.out_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    for gid in selected:
        if gid not in by_id:
            raise CliError(f"unknown graph id {gid}", EXIT_PARSE)
        graph = by_id[gid]
        if args.format == "dot":
            path = outdir / f"{gid}.dot"
            path.write_text(render_dot(graph, gid))
        elif args.format == "json":
            path = outdir / f"{gid}.json"
            path.write_text(document_to_json(build_document(system, [graph])))
        else:
            path = outdir / f"{gid}.svg"
            path.write_text(render_svg(graph, gid))
        print(path)
    return EXIT_OK


def cmd_fundamental(args) -> int:
    system = _load_system(args.matrix)
    config = SearchConfig(m_max=args.m_max, workers=args.workers)
    graphs, stats = enumerate_kirchhoff(system, config)
    if not stats.complete:
        return EXIT_TRUNCATED
    if not graphs:
        print("no graphs to generate")
        return EXIT_OK
    doc = build_document(system, graphs, m_max=args.m_max)
    subsets = fundamental_sets(graphs, coeff_bound=args.coeff_bound)
    print(
        f"{len(subsets)} fundamental set(s) under coeff bound {args.coeff_bound} "
        "(bound-relative: larger bounds could shrink these)"
    )
    for subset in subsets:
        names = ", ".join(doc["graphs"][i]["id"] for i in subset)
        print(f"  {{{names}}}")
    return EXIT_OK


def cmd_min_multiplicity(args) -> int:
    system = _load_system(args.matrix)
    result = min_multiplicity(system, args.m_limit)
    print("none" if result is None else result)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kirchgraph",
        description="Enumerate, verify, tile and render uniform Kirchhoff graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_matrix_opts(p):
        p.add_argument("--matrix", required=True, help="path to the matrix file")
        p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("enumerate", help="find all graphs up to a multiplicity bound")
    add_matrix_opts(p)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--out", help="write the JSON document here")
    p.add_argument("--classify-prime", action="store_true")
    p.add_argument("--no-negative-sum-prune", action="store_true")
    p.add_argument("--node-limit", type=int, default=None)
    p.add_argument("--cut-order", choices=("lex", "norm"), default="lex")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="re-check every graph in a document")
    p.add_argument("--doc", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tile", help="evaluate a tiling expression over a document")
    p.add_argument("--doc", required=True)
    p.add_argument("expression", help='e.g. "1*G0@(0,0) + 1*G1@(1,1)"')
    p.add_argument("--out", help="write the result document here")
    p.add_argument("--check-prime", action="store_true")
    p.set_defaults(func=cmd_tile)

    p = sub.add_parser("render", help="write SVG, DOT or JSON files for graphs")
    p.add_argument("--doc", required=True)
    p.add_argument("--format", choices=("svg", "dot", "json"), default="svg")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--ids", help="comma-separated graph ids (default: all)")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("fundamental", help="minimum generating subsets")
    add_matrix_opts(p)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--coeff-bound", type=int, default=DEFAULT_COEFF_BOUND)
    p.set_defaults(func=cmd_fundamental)

    p = sub.add_parser("min-multiplicity", help="smallest m with any graph")
    add_matrix_opts(p)
    p.add_argument("--m-limit", type=int, required=True)
    p.set_defaults(func=cmd_min_multiplicity)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    raise SystemExit(main())

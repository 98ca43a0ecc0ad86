"""Command-line front end.

Exit codes: 0 success / claim holds, 1 claim fails, 2 usage, parse or
precondition error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import betti as betti_mod
from .betti import betti_table, taylor_table
from .cover_ideals import (
    BipartiteContext,
    associated_ideal,
    cover_ideal,
    edge_ideal,
    j_lower,
    j_upper,
    j_upper_tilde,
    restricted_cover_ideal,
)
from .errors import BudgetExceeded, ParseError, PreconditionError, StructureError
from .graph import SimpleGraph, parse_graph
from .linalg import FieldSpec
from .monomial import MonomialIdeal, parse_ideal
from . import verify as V

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _read_graph(path: str) -> SimpleGraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_graph(text)


def _vertex_set(text: str | None) -> frozenset[int]:
    if not text:
        return frozenset()
    try:
        return frozenset(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError as exc:
        raise ParseError(f"bad vertex list {text!r}") from exc


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _ideal_from_graph(graph: SimpleGraph, which: str, side: str, vertices) -> MonomialIdeal:
    if which == "cover":
        return cover_ideal(graph)
    if which == "edge":
        return edge_ideal(graph)
    if which == "assoc":
        return associated_ideal(BipartiteContext.of(graph, side))
    if which == "upper":
        return j_upper(graph, vertices)
    if which == "lower":
        return j_lower(graph, vertices)
    if which == "tilde":
        return j_upper_tilde(graph, vertices)
    if which == "restricted":
        return restricted_cover_ideal(graph, vertices)
    raise ParseError(f"unknown ideal kind {which!r}")


def _load_ideal(source: str, which: str, side: str, vertices) -> MonomialIdeal:
    if "@" in source:
        return parse_ideal(source)
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc.strerror}") from exc
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from exc
        if "generators" in data:
            return MonomialIdeal.from_json(data)
    return _ideal_from_graph(parse_graph(text), which, side, vertices)


# ------------------------------------------------------------------ commands


def cmd_covers(args) -> int:
    graph = _read_graph(args.graph)
    covers = graph.minimal_vertex_covers()
    text = "\n".join("{" + ",".join(str(v) for v in sorted(c)) + "}" for c in covers)
    _emit(args, text, {"covers": [sorted(c) for c in covers]})
    return EXIT_OK


def cmd_ideal(args) -> int:
    graph = _read_graph(args.graph)
    ideal = _ideal_from_graph(graph, args.which, args.side, _vertex_set(args.set))
    _emit(args, str(ideal), ideal.to_json())
    return EXIT_OK


def cmd_betti(args) -> int:
    ideal = _load_ideal(args.source, args.which, args.side, _vertex_set(args.set))
    if ideal.n > args.max_vars:
        raise BudgetExceeded(f"{ideal.n} variables exceed --max-vars {args.max_vars}")
    field_ = _field(args.field)
    if args.oracle == "taylor":
        table = taylor_table(ideal, field_, args.max_generators)
    else:
        table = betti_table(ideal, field_, workers=args.workers)
    if args.graded:
        payload = {
            "entries": [
                {"i": i, "j": j, "value": v} for (i, j), v in table.graded_entries().items()
            ]
        }
        _emit(args, table.render_graded(), payload)
    else:
        _emit(args, table.render(), table.to_json())
    return EXIT_OK


def _vertex_targets(graph: SimpleGraph, vertex: int | None, eligible) -> list[int]:
    if vertex is not None:
        return [vertex]
    targets = [v for v in graph.vertices if eligible(v)]
    if not targets:
        raise PreconditionError("no vertex satisfies the claim's hypothesis")
    return targets


def _run_claim(args, field_: FieldSpec) -> list[V.VerificationReport]:
    claim = args.claim
    if claim == "search":
        signature = None
        if args.signature:
            try:
                raw = [int(t) for t in args.signature.split(",")]
            except ValueError:
                raw = []
            if len(raw) != 2:
                raise ParseError("--signature takes 'i,j'")
            signature = (raw[0], raw[1])
        return [V.verify_search(args.max_n, field_, args.workers, signature)]
    if args.graph is None:
        raise ParseError(f"claim {claim!r} needs a graph file")
    graph = _read_graph(args.graph)
    vertices = _vertex_set(args.set)
    if claim == "neighbour-splitting":
        targets = _vertex_targets(
            graph, args.vertex, lambda v: graph.is_independent(graph.neighbourhood(v))
        )
        return [V.verify_neighbour_splitting(graph, v, field_) for v in targets]
    if claim == "bipartite-splitting":
        return [V.verify_bipartite_sweep(graph, field_)]
    if claim == "leaf-recursion":
        targets = _vertex_targets(graph, args.vertex, lambda v: graph.degree(v) == 1)
        return [V.verify_leaf_recursion(graph, v, field_) for v in targets]
    if claim == "split-ideals":
        targets = _vertex_targets(graph, args.vertex, lambda v: True)
        return [V.verify_split_ideals(graph, v) for v in targets]
    if claim == "cover-facts":
        return [V.verify_cover_facts(graph)]
    if claim in ("bipartite-transfer", "bipartite-meet"):
        ctx = BipartiteContext.of(graph, args.side)
        if claim == "bipartite-meet":
            return [V.verify_bipartite_meet(ctx)]
        return [V.verify_bipartite_transfer(ctx, field_)]
    if not vertices and claim != "lower-vanishing":
        raise ParseError(f"claim {claim!r} needs --set")
    if claim == "lower-vanishing":
        return [V.verify_lower_vanishing(graph, vertices, field_)]
    if claim == "lower-agreement":
        return [V.verify_lower_agreement(graph, vertices, field_)]
    if claim == "restricted-meet":
        return [V.verify_restricted_meet(graph, vertices)]
    if claim == "meet-formula":
        return [V.verify_meet_formula(graph, vertices)]
    raise ParseError(f"unknown claim {claim!r}")


CLAIMS = (
    "neighbour-splitting",
    "bipartite-splitting",
    "bipartite-transfer",
    "bipartite-meet",
    "lower-vanishing",
    "lower-agreement",
    "leaf-recursion",
    "split-ideals",
    "cover-facts",
    "restricted-meet",
    "meet-formula",
    "search",
)


def cmd_verify(args) -> int:
    field_ = _field(args.field)
    reports = _run_claim(args, field_)
    if args.format == "json":
        payload = [r.to_dict(timing=args.timing) for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2))
    else:
        for r in reports:
            if r.claim == "search" and not r.passed:
                print("none found")
            print(r.render(timing=args.timing))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coverbetti",
        description="Cover ideals of graphs, multigraded Betti numbers and Betti splittings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, field_opt=True):
        p.add_argument("--format", choices=("text", "json"), default="text")
        if field_opt:
            p.add_argument("--field", default="q", help="'q' (default) or 'p:<prime>'")
            p.add_argument("--workers", type=_positive, default=1)

    p = sub.add_parser("covers", help="list minimal vertex covers")
    p.add_argument("graph")
    common(p, field_opt=False)
    p.set_defaults(func=cmd_covers)

    kinds = ("cover", "edge", "assoc", "upper", "lower", "tilde", "restricted")
    p = sub.add_parser("ideal", help="print an ideal attached to a graph")
    p.add_argument("which", choices=kinds)
    p.add_argument("graph")
    p.add_argument("--side", choices=("L", "R"), default="L",
                   help="bipartition side generating the associated ideal")
    p.add_argument("--set", help="vertex set for upper/lower/tilde/restricted, e.g. 1,2")
    common(p, field_opt=False)
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("betti", help="multigraded Betti table")
    p.add_argument("source", help="graph file, ideal JSON file, or inline 'x1*x2, x2*x3 @ n=3'")
    p.add_argument("--which", choices=kinds, default="cover",
                   help="ideal to build when SOURCE is a graph")
    p.add_argument("--side", choices=("L", "R"), default="L")
    p.add_argument("--set")
    p.add_argument("--oracle", choices=("koszul", "taylor"), default="koszul")
    p.add_argument("--graded", action="store_true", help="print (i, j, value) rows")
    p.add_argument("--max-vars", type=_positive, default=20)
    p.add_argument("--max-generators", type=_positive, default=betti_mod.TAYLOR_MAX_GENERATORS)
    common(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("verify", help="check a splitting claim on an instance")
    p.add_argument("claim", choices=CLAIMS)
    p.add_argument("graph", nargs="?")
    p.add_argument("--vertex", type=int)
    p.add_argument("--set")
    p.add_argument("--side", choices=("L", "R"), default="L")
    p.add_argument("--max-n", type=_positive, default=7)
    p.add_argument("--signature", help="search only for failures at graded position 'i,j'")
    p.add_argument("--timing", action="store_true")
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, PreconditionError, StructureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

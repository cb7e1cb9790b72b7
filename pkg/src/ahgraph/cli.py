"""Command-line interface.

Exit status: 0 on success, 1 on I/O or parse errors, 2 when an operation's
preconditions are not met (argparse usage errors also exit 2).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .bounds import bounds_report
from .coloring import DEFAULT_EXACT_LIMIT, degeneracy_order, exact_coloring, greedy_color
from .density import densest_subgraph, is_average_hereditary
from .errors import AhGraphError, GraphError, ParseError, PreconditionError
from .experiment import FAMILIES, make_graph, rows_to_csv, run_compare
from .formats import (
    ReportDocument,
    csv_header,
    format_fraction,
    read_graph_text,
    serialize_report,
    write_dimacs_graph,
)
from .graph import average_degree
from .reduction import karp_graph, parse_cnf, reduction_metadata

FORMAT_VERSION = 1

EXIT_OK, EXIT_IO, EXIT_PRECONDITION = 0, 1, 2


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write_text(path, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _load_graph(path):
    return read_graph_text(_read_text(path))


def _fmt_vertices(vs) -> str:
    return " ".join(str(v) for v in sorted(vs))


def cmd_mad(args):
    g = _load_graph(args.graph)
    res = densest_subgraph(g)
    print(f"mad {format_fraction(res.mad)}")
    print(f"density {format_fraction(res.density)}")
    print(f"densest {_fmt_vertices(res.subgraph_vertices)}")


def cmd_check_ah(args):
    g = _load_graph(args.graph)
    verdict = is_average_hereditary(g)
    print(f"average_degree {format_fraction(average_degree(g))}")
    print(f"average_hereditary {'yes' if verdict.is_ah else 'no'}")
    if verdict.witness is not None:
        w = verdict.witness
        print(f"witness_avg_degree {format_fraction(w.mad)}")
        print(f"witness {_fmt_vertices(w.subgraph_vertices)}")


def cmd_bounds(args):
    g = _load_graph(args.graph)
    report = bounds_report(g, run_exact=args.exact, exact_limit=args.limit)
    if args.json:
        doc = ReportDocument(report, input_path=args.graph, tool_version=__version__)
        sys.stdout.write(doc.to_json())
    elif args.csv:
        sys.stdout.write(csv_header() + serialize_report(report, "csv-row"))
    else:
        sys.stdout.write(serialize_report(report, "table"))


def cmd_color(args):
    g = _load_graph(args.graph)
    if args.exact:
        col = exact_coloring(g, args.limit)
    else:
        col = greedy_color(g, degeneracy_order(g).order)
    print(f"colors {col.num_colors}")
    print(" ".join(map(str, col.colors)))


def cmd_reduce(args):
    phi = parse_cnf(_read_text(args.cnf))
    kg = karp_graph(phi)
    _write_text(args.output, write_dimacs_graph(kg.graph))
    meta_path = args.meta
    if meta_path is None and args.output not in (None, "-"):
        meta_path = args.output + ".json"
    if meta_path is not None:
        meta = reduction_metadata(kg)
        meta["input"] = args.cnf
        meta["labels"] = [str(role) for role in kg.labels]
        Path(meta_path).write_text(json.dumps(meta, indent=2) + "\n", encoding="utf-8")


def _family_params(args) -> dict:
    return {k: getattr(args, k, None) for k in ("n", "k", "p", "a", "b", "vars", "clauses")}


def cmd_gen(args):
    g = make_graph(args.family, _family_params(args), args.seed)
    _write_text(args.output, write_dimacs_graph(g))


def cmd_compare(args):
    rows = run_compare(
        args.family,
        _family_params(args),
        trials=args.trials,
        seed=args.seed,
        run_exact=args.exact,
        exact_limit=args.limit,
        jobs=args.jobs,
    )
    _write_text(args.output, rows_to_csv(rows))


def _add_family_params(p):
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("--n", type=int, help="vertex count (tree, regular, gnp)")
    p.add_argument("--k", type=int, help="degree (regular)")
    p.add_argument("--p", type=float, help="edge probability (gnp)")
    p.add_argument("--a", type=int, help="clique size (clique-path)")
    p.add_argument("--b", type=int, help="path length (clique-path)")
    p.add_argument("--vars", type=int, help="variables (karp)")
    p.add_argument("--clauses", type=int, help="clauses (karp)")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ahgraph",
        description="Maximum average degree, average-hereditary test and chromatic bounds.",
    )
    parser.add_argument(
        "--version", action="version", version=f"ahgraph {__version__} (format {FORMAT_VERSION})"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mad", help="maximum average degree and a densest vertex set")
    p.add_argument("graph", help="DIMACS .col or edge-list file ('-' for stdin)")
    p.set_defaults(func=cmd_mad)

    p = sub.add_parser("check-ah", help="decide the average-hereditary property")
    p.add_argument("graph")
    p.set_defaults(func=cmd_check_ah)

    p = sub.add_parser("bounds", help="chromatic-number bounds report")
    p.add_argument("graph")
    p.add_argument("--exact", action="store_true", help="also compute the chromatic number")
    p.add_argument("--limit", type=int, default=DEFAULT_EXACT_LIMIT)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("color", help="degeneracy greedy or exact colouring")
    p.add_argument("graph")
    p.add_argument("--exact", action="store_true")
    p.add_argument("--limit", type=int, default=DEFAULT_EXACT_LIMIT)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("reduce", help="3-CNF (DIMACS) to a 3-colouring instance")
    p.add_argument("cnf")
    p.add_argument("-o", "--output", help="graph output path (default stdout)")
    p.add_argument("--meta", help="metadata JSON path (default <output>.json)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", help="generate a graph from a family")
    _add_family_params(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("compare", help="bound comparison over random trials (CSV)")
    _add_family_params(p)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--exact", action="store_true")
    p.add_argument("--limit", type=int, default=DEFAULT_EXACT_LIMIT)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (OSError, ParseError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except AhGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

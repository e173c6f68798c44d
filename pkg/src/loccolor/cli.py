"""Command-line front end.

Exit status: 0 success, 1 check failed (witness printed), 2 unreadable
input, 3 search budget exhausted (verified interval printed).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds, formats
from .coloring import ColoringInputError, color_codes, is_locating
from .extremal import build_extremal_tree, verify_construction
from .graph import ConnectivityError, GraphInputError, max_degree
from .solver import ResourceLimitError, SearchConfig, locating_chromatic_number
from .trees import free_trees

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_LIMIT = 0, 1, 2, 3


class _UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _UsageError(f"{path}: {exc.strerror}") from None


def _load_graph(path: str):
    try:
        return formats.parse_edge_list(_read(path))
    except formats.ParseError as exc:
        raise formats.ParseError(f"{exc.message} ({path})", exc.line, exc.column) from None


def _load_coloring(path: str, n: int):
    try:
        return formats.parse_coloring(_read(path), n)
    except formats.ParseError as exc:
        raise formats.ParseError(f"{exc.message} ({path})", exc.line, exc.column) from None


def _search_config(args) -> SearchConfig:
    return SearchConfig(
        node_limit=args.node_limit,
        time_limit=args.time_limit,
        symmetry_breaking=not args.no_symmetry_breaking,
    )


def cmd_solve(args, out, err) -> int:
    g = _load_graph(args.graph)
    try:
        res = locating_chromatic_number(g, _search_config(args))
    except ResourceLimitError as exc:
        print(f"resource limit: chi_L in [{exc.lower}, {exc.upper}] ({exc})", file=err)
        if args.format == "json":
            print(json.dumps({"lower": exc.lower, "upper": exc.upper, "nodes": exc.nodes}), file=out)
        else:
            print(f"chi_L in [{exc.lower}, {exc.upper}]", file=out)
        return EXIT_LIMIT
    cert = formats.coloring_to_json(res.certificate)
    if args.certificate:
        Path(args.certificate).write_text(cert + "\n")
    if args.format == "json":
        print(json.dumps({"chi_L": res.chi_L, "certificate": json.loads(cert)}), file=out)
    else:
        print(f"chi_L = {res.chi_L}", file=out)
        if not args.certificate:
            print(cert, file=out)
    print(
        f"lower bound {res.lower_bound} ({res.lower_bound_used.value}), "
        f"refuted k={list(res.refuted)}, nodes {res.nodes_explored}",
        file=err,
    )
    return EXIT_OK


def cmd_check(args, out, err) -> int:
    g = _load_graph(args.graph)
    f = _load_coloring(args.coloring, g.vertex_count)
    verdict = is_locating(g, f)
    print(verdict.describe(), file=out)
    return EXIT_OK if verdict else EXIT_FAIL


def cmd_codes(args, out, err) -> int:
    g = _load_graph(args.graph)
    f = _load_coloring(args.coloring, g.vertex_count)
    codes = color_codes(g, f)
    if args.format == "json":
        print(json.dumps([list(c) for c in codes]), file=out)
    elif args.format == "csv":
        header = ["vertex", "color"] + [f"d{j}" for j in range(1, f.k + 1)]
        rows = ([v, f.colors[v], *codes[v]] for v in range(g.vertex_count))
        out.write(formats.format_csv(header, rows))
    else:
        out.write(formats.format_codes(codes, f.colors))
    return EXIT_OK


def cmd_gen_extremal(args, out, err) -> int:
    k = args.k
    if k < 3:
        raise _UsageError("k must be >= 3")
    tree = build_extremal_tree(k)
    edges = formats.format_edge_list(tree.graph)
    labels = json.dumps({str(v): str(lab) for v, lab in enumerate(tree.labels)}, indent=0)
    cert = formats.coloring_to_json(tree.coloring)
    if args.verify:
        rep = verify_construction(k)
        print(f"T_{k}: {rep.vertex_count} vertices, Δ={rep.max_degree}, locating, codes match", file=err)
    if args.out_dir is None:
        if args.format == "dot":
            out.write(formats.to_dot(tree.graph, tree.coloring, tree.predicted, tree.labels, f"T{k}"))
        else:
            out.write(edges)
        return EXIT_OK
    d = Path(args.out_dir)
    d.mkdir(parents=True, exist_ok=True)
    stem = d / f"T{k}"
    Path(f"{stem}.edges").write_text(edges)
    Path(f"{stem}.labels.json").write_text(labels + "\n")
    Path(f"{stem}.coloring.json").write_text(cert + "\n")
    written = [f"{stem}.edges", f"{stem}.labels.json", f"{stem}.coloring.json"]
    if args.dot or args.format == "dot":
        Path(f"{stem}.dot").write_text(
            formats.to_dot(tree.graph, tree.coloring, tree.predicted, tree.labels, f"T{k}")
        )
        written.append(f"{stem}.dot")
    for p in written:
        print(p, file=out)
    return EXIT_OK


def cmd_bounds(args, out, err) -> int:
    if args.k_max < 3:
        raise _UsageError("--k-max must be >= 3")
    rows = (
        (r.k, r.old_bound, r.new_bound, ";".join(map(str, sorted(r.lemma_argmax))))
        for r in bounds.bound_table(args.k_max)
    )
    out.write(formats.format_csv(["k", "old_bound", "new_bound", "lemma_argmax"], rows))
    return EXIT_OK


def cmd_census(args, out, err) -> int:
    if args.n < 2:
        raise _UsageError("census needs n >= 2")
    cfg = _search_config(args)
    rows = []
    for n in range(2, args.n + 1):
        for idx, g in enumerate(free_trees(n)):
            res = locating_chromatic_number(g, cfg)
            rows.append((n, idx, max_degree(g), res.chi_L))
    if args.format == "text":
        for n, idx, delta, chi in rows:
            print(f"n={n} tree={idx} Δ={delta} chi_L={chi}", file=out)
    else:
        out.write(formats.format_csv(["n", "tree", "max_degree", "chi_L"], rows))
    return EXIT_OK


def _add_limits(p):
    p.add_argument("--node-limit", type=int, default=None)
    p.add_argument("--time-limit", type=float, default=None, help="seconds")
    p.add_argument("--no-symmetry-breaking", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="loccolor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute the locating chromatic number")
    p.add_argument("graph", help="edge-list file, or - for stdin")
    p.add_argument("--certificate", help="write the certificate coloring JSON here")
    p.add_argument("--format", choices=("text", "json"), default="text")
    _add_limits(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="check whether a coloring is locating")
    p.add_argument("graph")
    p.add_argument("coloring", help="coloring JSON or 'v c' lines")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("codes", help="print the color code of every vertex")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_codes)

    p = sub.add_parser("gen-extremal", help="write the extremal tree T_k and its coloring")
    p.add_argument("k", type=int)
    p.add_argument("--out-dir", help="write T<k>.edges/.labels.json/.coloring.json here")
    p.add_argument("--dot", action="store_true", help="also write T<k>.dot")
    p.add_argument("--format", choices=("text", "dot"), default="text")
    p.add_argument("--verify", action="store_true", help="run the construction checks too")
    p.set_defaults(func=cmd_gen_extremal)

    p = sub.add_parser("bounds", help="CSV table of the degree bounds")
    p.add_argument("--k-max", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("census", help="solve every free tree up to n vertices")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("csv", "text"), default="csv")
    _add_limits(p)
    p.set_defaults(func=cmd_census)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args, out, err)
    except formats.ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_PARSE
    except (_UsageError, GraphInputError, ColoringInputError, ConnectivityError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PARSE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

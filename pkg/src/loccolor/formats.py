"""Text formats: edge lists, colorings (JSON and ``v c`` lines), CSV, DOT."""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Sequence

from .coloring import CodeVector, Coloring, ColoringInputError
from .graph import Graph, GraphInputError, build_graph

# fixed 12-color palette for DOT output (ColorBrewer "Set3")
PALETTE = (
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
    "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f",
)


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


def _tokens(text: str):
    """Yield ``(line_no, [(column, token), ...])`` for non-blank lines."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = []
        col = 0
        for part in body.split():
            col = body.index(part, col)
            toks.append((col + 1, part))
            col += len(part)
        if toks:
            yield lineno, toks


def _int(tok: tuple[int, str], lineno: int) -> int:
    col, text = tok
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected an integer, got {text!r}", lineno, col) from None


def parse_edge_list(text: str) -> Graph:
    lines = list(_tokens(text))
    if not lines:
        raise ParseError("empty input; expected a header line 'n m'", 1)
    lineno, head = lines[0]
    if len(head) != 2:
        raise ParseError("header must be 'n m'", lineno, head[0][0])
    n, m = (_int(t, lineno) for t in head)
    if n < 0 or m < 0:
        raise ParseError("n and m must be non-negative", lineno)
    body = lines[1:]
    if len(body) != m:
        where = body[-1][0] + 1 if body else lineno + 1
        raise ParseError(f"header declares {m} edges, found {len(body)}", where)
    edges = []
    for lineno, toks in body:
        if len(toks) != 2:
            raise ParseError("edge line must be 'u v'", lineno, toks[0][0])
        u, v = (_int(t, lineno) for t in toks)
        for col_tok, x in zip(toks, (u, v)):
            if not 0 <= x < n:
                raise ParseError(f"vertex {x} outside [0, {n})", lineno, col_tok[0])
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno, toks[0][0])
        edges.append((u, v))
    try:
        return build_graph(n, edges)
    except GraphInputError as exc:  # pragma: no cover - checked above
        raise ParseError(str(exc), lineno) from exc


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.vertex_count} {len(edges)}"]
    lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def coloring_to_json(f: Coloring) -> str:
    return json.dumps({"k": f.k, "colors": list(f.colors)})


def coloring_from_json(text: str) -> Coloring:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict) or "colors" not in data:
        raise ParseError("expected an object with 'k' and 'colors'", 1)
    colors = data["colors"]
    if not isinstance(colors, list) or not all(isinstance(c, int) for c in colors):
        raise ParseError("'colors' must be a list of integers", 1)
    k = data.get("k", max(colors, default=0))
    try:
        return Coloring(k, colors)
    except ColoringInputError as exc:
        raise ParseError(str(exc), 1) from None


def coloring_from_lines(text: str, vertex_count: int | None = None) -> Coloring:
    """Parse ``v c`` lines; ``k`` is the largest color seen."""
    pairs = {}
    for lineno, toks in _tokens(text):
        if len(toks) != 2:
            raise ParseError("coloring line must be 'v c'", lineno, toks[0][0])
        v, c = (_int(t, lineno) for t in toks)
        if v in pairs:
            raise ParseError(f"vertex {v} colored twice", lineno, toks[0][0])
        if c < 1:
            raise ParseError(f"colors are 1-based, got {c}", lineno, toks[1][0])
        pairs[v] = c
    n = vertex_count if vertex_count is not None else len(pairs)
    missing = [v for v in range(n) if v not in pairs]
    if missing or len(pairs) != n:
        raise ParseError(f"expected colors for vertices 0..{n - 1}; missing {missing[:5]}", 1)
    return Coloring(max(pairs.values(), default=1), [pairs[v] for v in range(n)])


def parse_coloring(text: str, vertex_count: int | None = None) -> Coloring:
    if text.lstrip().startswith("{"):
        return coloring_from_json(text)
    return coloring_from_lines(text, vertex_count)


def format_codes(codes: Sequence[CodeVector], colors: Sequence[int], labels=None) -> str:
    rows = []
    for v, code in enumerate(codes):
        name = str(labels[v]) if labels is not None else str(v)
        rows.append(f"{name}\t{colors[v]}\t({','.join(map(str, code))})")
    return "\n".join(rows) + "\n"


def format_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph, f: Coloring | None = None, codes=None, labels=None, name: str = "G") -> str:
    """Undirected DOT graph; nodes filled by color class, codes as tooltips."""
    out = [f"graph {name} {{", "  node [style=filled, shape=circle];"]
    for v in range(g.vertex_count):
        attrs = {"label": str(labels[v]) if labels is not None else str(v)}
        if f is not None:
            attrs["fillcolor"] = PALETTE[(f.colors[v] - 1) % len(PALETTE)]
            attrs["xlabel"] = str(f.colors[v])
        if codes is not None:
            attrs["tooltip"] = "(" + ",".join(map(str, codes[v])) + ")"
        body = ", ".join(f"{key}={_dot_quote(val)}" for key, val in attrs.items())
        out.append(f"  {v} [{body}];")
    for u, v in g.edges():
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"

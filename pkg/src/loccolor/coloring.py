"""Color codes and the locating-coloring check.

Colors are 1-based throughout; ``Coloring.colors[v]`` is the color of vertex
``v`` and code coordinate ``j`` (0-based in the tuple) is the distance to
color class ``j + 1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .graph import UNREACHABLE, ConnectivityError, Graph, multi_source_bfs


class ColoringInputError(ValueError):
    pass


class CodeVector(tuple):
    """Integer k-tuple with componentwise ``+``/``-`` and scalar ``*``."""

    def __new__(cls, entries=()):
        return super().__new__(cls, entries)

    def _check(self, other):
        if len(other) != len(self):
            raise ValueError(f"length mismatch: {len(self)} vs {len(other)}")

    def __add__(self, other):
        self._check(other)
        return CodeVector(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        self._check(other)
        return CodeVector(a - b for a, b in zip(self, other))

    def __mul__(self, scalar):
        return CodeVector(a * scalar for a in self)

    __rmul__ = __mul__

    def __neg__(self):
        return CodeVector(-a for a in self)

    def __repr__(self):
        return "(" + ",".join(str(a) for a in self) + ")"

    @classmethod
    def basis(cls, k: int, t: int) -> CodeVector:
        """e_t for 1-based ``t``."""
        return cls(1 if j == t else 0 for j in range(1, k + 1))

    @classmethod
    def ones(cls, k: int) -> CodeVector:
        return cls((1,) * k)


@dataclass(frozen=True)
class Coloring:
    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if self.k < 1:
            raise ColoringInputError(f"k must be positive, got {self.k}")
        for v, c in enumerate(self.colors):
            if not 1 <= c <= self.k:
                raise ColoringInputError(f"vertex {v} has color {c} outside [1, {self.k}]")

    def __len__(self) -> int:
        return len(self.colors)

    def classes(self) -> list[list[int]]:
        """The ordered partition; ``classes()[i - 1]`` holds color ``i``."""
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c - 1].append(v)
        return out

    def is_surjective(self) -> bool:
        return len(set(self.colors)) == self.k

    def relabel(self, perm: Sequence[int]) -> Coloring:
        colors = [0] * len(self.colors)
        for v, c in enumerate(self.colors):
            colors[perm[v]] = c
        return Coloring(self.k, colors)


class Outcome(enum.Enum):
    LOCATING = "LOCATING"
    IMPROPER = "IMPROPER"
    COLLISION = "COLLISION"


@dataclass(frozen=True)
class LocatingVerdict:
    outcome: Outcome
    edge: tuple[int, int] | None = None
    pair: tuple[int, int] | None = None
    code: CodeVector | None = None

    def __bool__(self) -> bool:
        return self.outcome is Outcome.LOCATING

    def describe(self) -> str:
        if self.outcome is Outcome.IMPROPER:
            return f"IMPROPER edge {self.edge[0]}-{self.edge[1]}"
        if self.outcome is Outcome.COLLISION:
            return f"COLLISION vertices {self.pair[0]} {self.pair[1]} share code {self.code!r}"
        return "LOCATING"


def _check_length(g: Graph, f: Coloring) -> None:
    if len(f.colors) != g.vertex_count:
        raise ColoringInputError(
            f"coloring has {len(f.colors)} entries for a graph on {g.vertex_count} vertices"
        )


def validate_proper(g: Graph, f: Coloring) -> tuple[bool, tuple[int, int] | None]:
    """Return ``(True, None)`` or ``(False, edge)`` with the smallest bad edge."""
    _check_length(g, f)
    col = f.colors
    for u in range(g.vertex_count):
        cu = col[u]
        for v in g.adjacency[u]:
            if u < v and col[v] == cu:
                return False, (u, v)
    return True, None


def _class_distances(g: Graph, f: Coloring) -> list[list[int]]:
    # one multi-source BFS per color class
    if UNREACHABLE in multi_source_bfs(g, (0,)):
        raise ConnectivityError("color codes need a connected graph")
    return [multi_source_bfs(g, cls) for cls in f.classes()]


def color_codes(g: Graph, f: Coloring) -> list[CodeVector]:
    _check_length(g, f)
    if not f.is_surjective():
        raise ColoringInputError("coloring is not onto [1..k]; some color class is empty")
    ok, edge = validate_proper(g, f)
    if not ok:
        raise ColoringInputError(f"coloring is not proper: edge {edge} is monochromatic")
    rows = _class_distances(g, f)
    return [CodeVector(row[v] for row in rows) for v in range(g.vertex_count)]


def is_locating(g: Graph, f: Coloring) -> LocatingVerdict:
    _check_length(g, f)
    if not f.is_surjective():
        raise ColoringInputError("coloring is not onto [1..k]; some color class is empty")
    ok, edge = validate_proper(g, f)
    if not ok:
        return LocatingVerdict(Outcome.IMPROPER, edge=edge)
    rows = _class_distances(g, f)
    # equal codes force equal colors, so one dict over all codes suffices
    first: dict[tuple[int, ...], int] = {}
    best: tuple[int, int] | None = None
    for v in range(g.vertex_count):
        code = tuple(row[v] for row in rows)
        u = first.setdefault(code, v)
        if u != v and (best is None or (u, v) < best):
            best = (u, v)
    if best is None:
        return LocatingVerdict(Outcome.LOCATING)
    u, v = best
    return LocatingVerdict(Outcome.COLLISION, pair=best, code=CodeVector(row[u] for row in rows))

"""Undirected simple graphs over dense integer vertex ids.

Adjacency is stored as sorted tuples so that every traversal, and therefore
every downstream tie-break, is deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

UNREACHABLE = -1


class GraphInputError(ValueError):
    """Malformed graph input (bad endpoint, self-loop, bad source, ...)."""


class ConnectivityError(ValueError):
    """An operation that needs a connected graph got a disconnected one."""


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.vertex_count) for v in self.adjacency[u] if u < v]

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return build_graph(self.vertex_count, [(perm[u], perm[v]) for u, v in self.edges()])


def build_graph(vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if vertex_count < 0:
        raise GraphInputError(f"negative vertex count {vertex_count}")
    nbrs: list[set[int]] = [set() for _ in range(vertex_count)]
    for u, v in edges:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphInputError(f"edge ({u}, {v}) has an endpoint outside [0, {vertex_count})")
        if u == v:
            raise GraphInputError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(vertex_count, tuple(tuple(sorted(s)) for s in nbrs))


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.vertex_count:
        raise GraphInputError(f"vertex {v} outside [0, {g.vertex_count})")


def multi_source_bfs(g: Graph, sources: Iterable[int]) -> list[int]:
    """Distance from every vertex to the nearest source (UNREACHABLE if none)."""
    dist = [UNREACHABLE] * g.vertex_count
    queue = deque()
    for s in sources:
        if dist[s] != 0:
            dist[s] = 0
            queue.append(s)
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du
                queue.append(w)
    return dist


def bfs_distances(g: Graph, source: int) -> list[int]:
    _check_vertex(g, source)
    return multi_source_bfs(g, (source,))


def distance_to_set(g: Graph, v: int, targets: Iterable[int]) -> int:
    """``min(d(v, x) for x in targets)``."""
    targets = set(targets)
    if not targets:
        raise GraphInputError("target set is empty")
    _check_vertex(g, v)
    for x in targets:
        _check_vertex(g, x)
    if v in targets:
        return 0
    dist = [UNREACHABLE] * g.vertex_count
    dist[v] = 0
    queue = deque((v,))
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = dist[u] + 1
                if w in targets:
                    return dist[w]
                queue.append(w)
    raise ConnectivityError(f"no vertex of the target set is reachable from {v}")


def is_connected(g: Graph) -> bool:
    if g.vertex_count == 0:
        return True
    return UNREACHABLE not in multi_source_bfs(g, (0,))


def is_tree(g: Graph) -> bool:
    return g.vertex_count >= 1 and g.edge_count == g.vertex_count - 1 and is_connected(g)


def max_degree(g: Graph) -> int:
    if g.vertex_count == 0:
        raise GraphInputError("max degree of the empty graph is undefined")
    return max(len(a) for a in g.adjacency)


def all_pairs_distances(g: Graph) -> list[list[int]]:
    return [multi_source_bfs(g, (s,)) for s in range(g.vertex_count)]


def diameter(g: Graph) -> int:
    if g.vertex_count == 0:
        raise GraphInputError("diameter of the empty graph is undefined")
    best = 0
    for s in range(g.vertex_count):
        row = multi_source_bfs(g, (s,))
        if UNREACHABLE in row:
            raise ConnectivityError("diameter requires a connected graph")
        best = max(best, max(row))
    return best


def check_connected(g: Graph) -> None:
    if not is_connected(g):
        raise ConnectivityError("graph is not connected")


# -- small named families, used by the CLI and the tests ---------------------

def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_multipartite_graph(*parts: int) -> Graph:
    owner = [p for p, size in enumerate(parts) for _ in range(size)]
    n = len(owner)
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if owner[i] != owner[j]])

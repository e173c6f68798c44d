"""Exact locating chromatic number by backtracking.

The search colors vertices in BFS order from a maximum-degree root.  With
symmetry breaking on, a vertex may only open color ``c`` once colors
``1..c-1`` are in use, so each partition into classes is visited once.
Pruning is limited to rules that are sound for every graph:

* properness against already-colored neighbors;
* false twins (distinct vertices with identical open neighborhoods, e.g.
  two leaves on the same parent) can never share a color, because every
  vertex other than the pair is equidistant from both;
* enough uncolored vertices must remain to make the coloring onto.

A colored vertex's code is settled once every coordinate is at most its
distance to the nearest uncolored vertex: no later assignment can bring a
class closer.  Two settled codes that agree end the branch.  On a complete
assignment every code is settled, so a leaf that survives is locating.

:func:`naive_oracle_chi_L` is the independent cross-check: it walks every
partition of the vertex set into independent sets and compares all code
pairs from an all-pairs distance matrix, sharing no code with the search.
"""

from __future__ import annotations

import enum
import time
from collections import deque
from dataclasses import dataclass, field

from .bounds import tree_degree_lower_bound
from .coloring import Coloring, is_locating
from .graph import (
    Graph,
    GraphInputError,
    all_pairs_distances,
    check_connected,
    is_tree,
    max_degree,
)

ORACLE_MAX_N = 12


class ResourceLimitError(RuntimeError):
    """Search budget exhausted before a decision was reached.

    ``lower``/``upper`` bracket the locating chromatic number as far as it
    was verified; ``certificate`` is a locating ``upper``-coloring.
    """

    def __init__(self, message, lower=None, upper=None, certificate=None, nodes=0):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.certificate = certificate
        self.nodes = nodes


@dataclass(frozen=True)
class SearchConfig:
    node_limit: int | None = None
    symmetry_breaking: bool = True
    time_limit: float | None = None  # seconds

    def __post_init__(self):
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError("node_limit must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")


class LowerBound(enum.Enum):
    NONE = "none"
    EDGE = "edge"
    SMALL_ORDER = "small-order"
    TREE_DEGREE = "tree-degree"


@dataclass(frozen=True)
class SolveResult:
    chi_L: int
    certificate: Coloring
    lower_bound: int
    lower_bound_used: LowerBound
    nodes_explored: int
    # k values where an exhaustive search found no locating k-coloring
    refuted: tuple[int, ...] = field(default=())


class _Budget:
    def __init__(self, cfg: SearchConfig):
        self.node_limit = cfg.node_limit
        self.deadline = None if cfg.time_limit is None else time.monotonic() + cfg.time_limit
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise ResourceLimitError(f"node limit {self.node_limit} exceeded", nodes=self.nodes)
        if self.deadline is not None and self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise ResourceLimitError("time limit exceeded", nodes=self.nodes)


def search_order(g: Graph) -> list[int]:
    """BFS order from the lowest-id vertex of maximum degree."""
    root = max(range(g.vertex_count), key=lambda v: (g.degree(v), -v))
    seen = [False] * g.vertex_count
    seen[root] = True
    order = [root]
    queue = deque(order)
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                order.append(w)
                queue.append(w)
    return order


def false_twin_groups(g: Graph) -> list[list[int]]:
    """Groups (size >= 2) of vertices sharing the same open neighborhood."""
    groups: dict[tuple[int, ...], list[int]] = {}
    for v in range(g.vertex_count):
        groups.setdefault(g.adjacency[v], []).append(v)
    return [grp for grp in groups.values() if len(grp) > 1]


def _search(g: Graph, k: int, cfg: SearchConfig, budget: _Budget) -> Coloring | None:
    n = g.vertex_count
    adj = g.adjacency
    order = search_order(g)
    pos = {v: i for i, v in enumerate(order)}
    earlier_nbrs = [[w for w in adj[v] if pos[w] < pos[v]] for v in order]
    twin_of = {}
    for grp in false_twin_groups(g):
        for v in grp:
            twin_of[v] = grp
    earlier_twins = [[w for w in twin_of.get(v, ()) if pos[w] < pos[v]] for v in order]

    dist = all_pairs_distances(g)
    inf = n + 1
    # horizon[i][v]: distance from v to the nearest vertex still uncolored
    # once order[:i] is colored
    horizon = [[inf] * n for _ in range(n + 1)]
    for i in range(n - 1, -1, -1):
        row = dist[order[i]]
        horizon[i] = [min(a, b) for a, b in zip(horizon[i + 1], row)]
    # nearest[c][v]: distance from v to the nearest vertex colored c so far
    nearest = [[inf] * n for _ in range(k + 1)]
    colors = [0] * n
    count = [0] * (k + 1)
    settled: dict[tuple[int, ...], int] = {}
    pending: list[int] = []
    canonical = cfg.symmetry_breaking

    def settle(idx: int) -> list[int] | None:
        """Record codes that can no longer change; None on a collision."""
        hz = horizon[idx]
        newly = []
        for w in pending:
            h = hz[w]
            code = tuple(nearest[c][w] for c in range(1, k + 1))
            if max(code) > h:
                continue
            if code in settled:
                for u in newly:
                    del settled[tuple(nearest[c][u] for c in range(1, k + 1))]
                return None
            settled[code] = w
            newly.append(w)
        return newly

    def place(idx: int, used: int) -> bool:
        remaining = n - idx
        if k - used > remaining:
            return False
        if idx == n:
            return True
        v = order[idx]
        forbidden = {colors[w] for w in earlier_nbrs[idx]}
        forbidden.update(colors[w] for w in earlier_twins[idx])
        top = min(used + 1, k) if canonical else k
        drow = dist[v]
        pending.append(v)
        for c in range(1, top + 1):
            if c in forbidden:
                continue
            budget.tick()
            colors[v] = c
            count[c] += 1
            old = nearest[c]
            nearest[c] = [a if a < b else b for a, b in zip(old, drow)]
            newly = settle(idx + 1)
            if newly is not None:
                for u in newly:
                    pending.remove(u)
                if place(idx + 1, used + 1 if count[c] == 1 else used):
                    return True
                for u in newly:
                    del settled[tuple(nearest[cc][u] for cc in range(1, k + 1))]
                pending.extend(newly)
            nearest[c] = old
            count[c] -= 1
        pending.remove(v)
        colors[v] = 0
        return False

    if place(0, 0):
        return Coloring(k, colors)
    return None


def _check_input(g: Graph, k: int) -> None:
    check_connected(g)
    if not 1 <= k <= g.vertex_count:
        raise GraphInputError(f"k must lie in [1, {g.vertex_count}], got {k}")


def exists_locating_k_coloring(
    g: Graph, k: int, cfg: SearchConfig | None = None
) -> Coloring | None:
    """First locating k-coloring in canonical search order, or None.

    Raises ResourceLimitError if the budget in ``cfg`` runs out first.
    """
    cfg = cfg or SearchConfig()
    _check_input(g, k)
    found = _search(g, k, cfg, _Budget(cfg))
    if found is not None:
        assert is_locating(g, found), "search returned a non-locating coloring"
    return found


def lower_bound(g: Graph) -> tuple[int, LowerBound]:
    """Best cheap lower bound on the locating chromatic number.

    Any graph with an edge needs 2 colors.  With 2 colors every code is
    (0,1) or (1,0), so 3 or more vertices force at least 3 colors.  For trees
    the degree bound ``Δ <= 4 * 3^(k-3)`` adds more.
    """
    n = g.vertex_count
    if n < 2:
        return 1, LowerBound.NONE
    lb, tag = 2, LowerBound.EDGE
    if n >= 3:
        lb, tag = 3, LowerBound.SMALL_ORDER
        if is_tree(g):
            t = tree_degree_lower_bound(max_degree(g))
            if t > lb:
                lb, tag = t, LowerBound.TREE_DEGREE
    return lb, tag


def locating_chromatic_number(g: Graph, cfg: SearchConfig | None = None) -> SolveResult:
    cfg = cfg or SearchConfig()
    check_connected(g)
    n = g.vertex_count
    if n < 2:
        raise GraphInputError("need at least 2 vertices")
    lb, tag = lower_bound(g)
    budget = _Budget(cfg)
    refuted = []
    for k in range(lb, n + 1):
        try:
            found = _search(g, k, cfg, budget)
        except ResourceLimitError as exc:
            trivial = Coloring(n, range(1, n + 1))
            raise ResourceLimitError(
                f"{exc}; chi_L in [{k}, {n}]", lower=k, upper=n, certificate=trivial, nodes=budget.nodes
            ) from None
        if found is not None:
            assert is_locating(g, found), "search returned a non-locating coloring"
            return SolveResult(k, found, lb, tag, budget.nodes, tuple(refuted))
        refuted.append(k)
    raise AssertionError("the all-distinct coloring is always locating")  # pragma: no cover


# -- independent brute-force oracle -------------------------------------------

def naive_is_locating(dist: list[list[int]], colors, k: int) -> bool:
    """Compare all code pairs directly, using a precomputed distance matrix."""
    n = len(colors)
    classes = [[u for u in range(n) if colors[u] == c] for c in range(1, k + 1)]
    codes = [tuple(min(dist[v][u] for u in cls) for cls in classes) for v in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            if codes[a] == codes[b]:
                return False
    return True


def naive_oracle_chi_L(g: Graph) -> int:
    """Minimum number of classes over every partition of V into independent
    sets whose color codes are pairwise distinct.

    Partitions are generated as restricted growth strings in vertex-id order
    (each coloring up to a renaming of colors, which never changes whether
    it is locating).  Only improper prefixes are cut.
    """
    n = g.vertex_count
    if n > ORACLE_MAX_N:
        raise GraphInputError(f"oracle is limited to {ORACLE_MAX_N} vertices, got {n}")
    check_connected(g)
    if n < 2:
        raise GraphInputError("need at least 2 vertices")
    dist = all_pairs_distances(g)
    adj = [set(a) for a in g.adjacency]

    def partitions(k):
        colors = [0] * n

        def rec(v, used):
            if v == n:
                if used == k:
                    yield colors
                return
            if k - used > n - v:
                return
            for c in range(1, min(used + 1, k) + 1):
                if any(colors[u] == c for u in adj[v] if u < v):
                    continue
                colors[v] = c
                yield from rec(v + 1, max(used, c))
            colors[v] = 0

        yield from rec(0, 0)

    for k in range(1, n + 1):
        if any(naive_is_locating(dist, colors, k) for colors in partitions(k)):
            return k
    raise AssertionError("unreachable")  # pragma: no cover

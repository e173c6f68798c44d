"""Tree generators: every free tree of a given order, and uniform random
labeled trees.

Free trees are produced as canonical level sequences with the
Wright-Richmond-Odlyzko-McKay successor rule, so each isomorphism class
appears exactly once and in a fixed order.
"""

from __future__ import annotations

import heapq
import random
from typing import Iterator

from .graph import Graph, build_graph


def level_sequence_to_graph(levels: list[int]) -> Graph:
    """Vertex ``i`` hangs under the last earlier vertex one level up."""
    edges = []
    last_at = {}
    for i, depth in enumerate(levels):
        if depth > 0:
            edges.append((last_at[depth - 1], i))
        last_at[depth] = i
    return build_graph(len(levels), edges)


def _next_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    # Beyer-Hedetniemi successor, optionally restarted at position p
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    nxt = list(levels)
    for i in range(p, len(nxt)):
        nxt[i] = nxt[i - p + q]
    return nxt


def _split(levels: list[int]) -> tuple[list[int], list[int]]:
    """Split at the root's second child: (first subtree re-rooted, remainder)."""
    m = len(levels)
    for i in range(2, len(levels)):
        if levels[i] == 1:
            m = i
            break
    left = [d - 1 for d in levels[1:m]]
    rest = [0] + levels[m:]
    return left, rest


def _make_canonical(levels: list[int]) -> list[int] | None:
    left, rest = _split(levels)
    lh, rh = max(left), max(rest)
    ok = rh >= lh
    if ok and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            ok = False
    if ok:
        return levels
    p = len(left)
    nxt = _next_rooted(levels, p)
    if levels[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[-len(tail):] = tail
    return nxt


def free_trees(n: int) -> Iterator[Graph]:
    """All non-isomorphic trees on ``n`` vertices."""
    if n < 1:
        return
    if n <= 2:
        yield level_sequence_to_graph(list(range(n)))
        return
    levels = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _make_canonical(levels)
        if levels is None:
            return
        yield level_sequence_to_graph(levels)
        levels = _next_rooted(levels)


def prufer_to_tree(seq: list[int]) -> Graph:
    n = len(seq) + 2
    degree = [1] * n
    for v in seq:
        if not 0 <= v < n:
            raise ValueError(f"Prüfer entry {v} outside [0, {n})")
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return build_graph(n, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniformly random labeled tree on ``n >= 2`` vertices."""
    if n < 2:
        raise ValueError("random_tree needs n >= 2")
    return prufer_to_tree([rng.randrange(n) for _ in range(n - 2)])

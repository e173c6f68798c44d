import random

import networkx as nx
import pytest
from hypothesis import strategies as st

from loccolor.extremal import build_extremal_tree
from loccolor.graph import build_graph
from loccolor.trees import prufer_to_tree


@pytest.fixture(scope="session")
def t5():
    return build_extremal_tree(5)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges())
    return h


@st.composite
def trees(draw, min_n=2, max_n=12):
    n = draw(st.integers(min_n, max_n))
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return prufer_to_tree(seq)


@st.composite
def connected_graphs(draw, min_n=2, max_n=10):
    """A random tree plus a few extra edges."""
    t = draw(trees(min_n, max_n))
    n = t.vertex_count
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=n))
    return build_graph(n, t.edges() + [(u, v) for u, v in extra if u != v])


@st.composite
def proper_colorings(draw, g):
    """Greedy proper coloring in a drawn vertex order, made onto by construction."""
    from loccolor.coloring import Coloring

    order = draw(st.permutations(range(g.vertex_count)))
    colors = [0] * g.vertex_count
    for v in order:
        taken = {colors[w] for w in g.adjacency[v]}
        choices = [c for c in range(1, g.vertex_count + 1) if c not in taken]
        # bias toward small colors but allow fresh ones
        colors[v] = draw(st.sampled_from(choices[:3]))
    used = sorted(set(colors))
    rename = {c: i + 1 for i, c in enumerate(used)}
    return Coloring(len(used), [rename[c] for c in colors])


def random_permutation(n, seed):
    perm = list(range(n))
    random.Random(seed).shuffle(perm)
    return perm

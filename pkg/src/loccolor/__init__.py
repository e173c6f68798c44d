"""Locating colorings, locating chromatic numbers, and extremal trees."""

from .bounds import (
    class_capacity,
    counterexample_report,
    lemma_max,
    new_bound,
    old_bound,
    tree_degree_lower_bound,
)
from .coloring import (
    CodeVector,
    Coloring,
    LocatingVerdict,
    Outcome,
    color_codes,
    is_locating,
    validate_proper,
)
from .extremal import build_extremal_tree, predicted_color_codes, tuple_family, verify_construction
from .graph import (
    UNREACHABLE,
    Graph,
    bfs_distances,
    build_graph,
    diameter,
    distance_to_set,
    is_connected,
    is_tree,
    max_degree,
)
from .solver import (
    ResourceLimitError,
    SearchConfig,
    SolveResult,
    exists_locating_k_coloring,
    locating_chromatic_number,
    naive_oracle_chi_L,
)

__version__ = "0.1.0"

"""Degree bounds relating the maximum degree of a tree to its locating
chromatic number.

``old_bound`` is the classical (incorrect) threshold ``(k-1) 2^(k-2)``;
``new_bound`` is the corrected ``4 * 3^(k-3)``, which is attained by the
trees built in :mod:`loccolor.extremal`.  Python integers are unbounded, so
none of this arithmetic can overflow; ``K_GRID_MAX`` only caps tabulation.
"""

from __future__ import annotations

from dataclasses import dataclass

K_GRID_MAX = 16


class BoundsInputError(ValueError):
    pass


def _check_k(k: int, lo: int = 3) -> None:
    if k < lo:
        raise BoundsInputError(f"k must be >= {lo}, got {k}")


def old_bound(k: int) -> int:
    _check_k(k)
    return (k - 1) * 2 ** (k - 2)


def new_bound(k: int) -> int:
    _check_k(k)
    return 4 * 3 ** (k - 3)


def lemma_product(p: int, q: int) -> int:
    return p * 2 ** (p - 1) * 3**q


def lemma_max(k: int) -> tuple[int, frozenset[int]]:
    """Maximize ``p 2^(p-1) 3^q`` over ``p >= 1, q >= 0, 1 + p + q = k``.

    Brute force over every feasible ``p``; the closed form ``4 * 3^(k-3)`` is
    checked against this in the tests rather than assumed here.
    """
    _check_k(k)
    values = {p: lemma_product(p, k - 1 - p) for p in range(1, k)}
    best = max(values.values())
    return best, frozenset(p for p, val in values.items() if val == best)


def class_capacity(p: int, k: int) -> int:
    """Most neighbors of one color a max-degree vertex can have when its
    neighborhood uses ``p`` colors in a locating k-coloring."""
    if not 1 <= p <= k - 1:
        raise BoundsInputError(f"p must lie in [1, {k - 1}], got {p}")
    return 2 ** (p - 1) * 3 ** (k - 1 - p)


def tree_degree_lower_bound(delta: int) -> int:
    """Smallest ``k >= 3`` with ``new_bound(k) >= delta``.

    For a tree on at least 3 vertices this is a lower bound on its locating
    chromatic number.
    """
    if delta < 1:
        raise BoundsInputError(f"maximum degree must be >= 1, got {delta}")
    k = 3
    while new_bound(k) < delta:
        k += 1
    return k


@dataclass(frozen=True)
class BoundRow:
    k: int
    old_bound: int
    new_bound: int
    lemma_value: int
    lemma_argmax: frozenset[int]


def bound_table(k_max: int, k_min: int = 3) -> list[BoundRow]:
    _check_k(k_min)
    rows = []
    for k in range(k_min, k_max + 1):
        value, argmax = lemma_max(k)
        rows.append(BoundRow(k, old_bound(k), new_bound(k), value, argmax))
    return rows


@dataclass(frozen=True)
class CounterexampleReport:
    k: int
    old_bound: int
    new_bound: int
    max_degree: int
    locating_colors: int
    locating: bool

    @property
    def contradicts_old_bound(self) -> bool:
        return self.locating and self.max_degree > self.old_bound and self.locating_colors <= self.k

    def summary(self) -> str:
        verb = "yet" if self.contradicts_old_bound else "and"
        return (
            f"Δ={self.max_degree} > {self.old_bound}, {verb} χ_L(T_{self.k})={self.k}"
            if self.max_degree > self.old_bound
            else f"Δ={self.max_degree} <= {self.old_bound}; no contradiction at k={self.k}"
        )


def counterexample_report(k: int) -> CounterexampleReport:
    """Build T_k, verify its k-coloring, and compare its degree with the old bound.

    T_k has maximum degree ``new_bound(k)``, which needs at least k colors,
    and the construction supplies a verified locating k-coloring, so
    ``χ_L(T_k) = k`` even though ``Δ(T_k) > old_bound(k)`` for ``k >= 5``.
    """
    _check_k(k, 5)
    from .coloring import is_locating
    from .extremal import build_extremal_tree
    from .graph import max_degree

    tree = build_extremal_tree(k)
    verdict = is_locating(tree.graph, tree.coloring)
    return CounterexampleReport(
        k=k,
        old_bound=old_bound(k),
        new_bound=new_bound(k),
        max_degree=max_degree(tree.graph),
        locating_colors=tree.coloring.k,
        locating=bool(verdict),
    )

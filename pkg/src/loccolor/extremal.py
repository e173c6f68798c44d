"""The extremal trees T_k: maximum degree 4 * 3^(k-3) with a locating k-coloring.

The center ``x`` is joined to one vertex ``y_i`` per tuple ``alpha_i`` of

    A     = {1} x {0} x {1,2} x {1,2,3}^(k-3)
    A_bar = {1} x {1,2} x {0} x {1,2,3}^(k-3)

(both in lexicographic order), and the pendant structure hung below each
``y_i`` is chosen so that its color code comes out as exactly ``alpha_i``:

* coordinate value 1 at position ``t``: a leaf ``z_i^t`` of color ``t``;
* coordinate value 2 at ``t >= 4``: a path ``y_i - x_i^t - z_i^t`` with
  ``x_i^t`` colored 1 and ``z_i^t`` colored ``t``;
* coordinate value 2 at ``t = 3`` (or ``t = 2`` on the barred side) is
  realized through the center by the opposite side, and value 3 through a
  leaf on the opposite side.

The same rules are applied for every ``k >= 3``; :func:`verify_construction`
checks the outcome from scratch instead of trusting the formulas.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from importlib import resources

from .bounds import new_bound
from .coloring import CodeVector, Coloring, color_codes, is_locating
from .graph import Graph, build_graph, is_tree, max_degree

MAX_VERIFY_K = 9


class ExtremalInputError(ValueError):
    pass


class VerificationError(AssertionError):
    def __init__(self, message: str, vertex: int | None = None, label: str | None = None):
        super().__init__(message)
        self.vertex = vertex
        self.label = label


class Role(enum.Enum):
    X = "x"
    Y = "y"
    Y_BAR = "ybar"
    Z = "z"
    Z_BAR = "zbar"
    XSUB = "xsub"
    XSUB_BAR = "xsubbar"

    @property
    def barred(self) -> bool:
        return self in (Role.Y_BAR, Role.Z_BAR, Role.XSUB_BAR)

    @property
    def prefix(self) -> str:
        return self.value[0] + ("bar" if self.barred else "")


@dataclass(frozen=True)
class LabeledVertex:
    role: Role
    i: int = 0
    t: int = 0

    def __str__(self) -> str:
        if self.role is Role.X:
            return "x"
        if self.role in (Role.Y, Role.Y_BAR):
            return f"{self.role.prefix}_{self.i}"
        return f"{self.role.prefix}_{self.i}^{self.t}"


_LABEL_RE = re.compile(r"^(x|y|z)(bar)?(?:_(\d+)(?:\^(\d+))?)?$")


def parse_label(text: str) -> LabeledVertex:
    """Inverse of ``str(LabeledVertex)``: ``x``, ``ybar_3``, ``z_15^4``, ..."""
    m = _LABEL_RE.match(text.strip())
    if not m:
        raise ExtremalInputError(f"unparseable vertex label {text!r}")
    letter, bar, i, t = m.groups()
    if letter == "x" and i is None:
        if bar:
            raise ExtremalInputError(f"unparseable vertex label {text!r}")
        return LabeledVertex(Role.X)
    if letter == "y":
        if i is None or t is not None:
            raise ExtremalInputError(f"y labels take a subscript only: {text!r}")
        return LabeledVertex(Role.Y_BAR if bar else Role.Y, int(i))
    if i is None or t is None:
        raise ExtremalInputError(f"{letter} labels need a subscript and superscript: {text!r}")
    role = {
        ("x", False): Role.XSUB,
        ("x", True): Role.XSUB_BAR,
        ("z", False): Role.Z,
        ("z", True): Role.Z_BAR,
    }[letter, bool(bar)]
    return LabeledVertex(role, int(i), int(t))


@dataclass(frozen=True)
class TupleFamily:
    k: int
    A: tuple[tuple[int, ...], ...]
    A_bar: tuple[tuple[int, ...], ...]


def tuple_family(k: int) -> TupleFamily:
    if k < 3:
        raise ExtremalInputError(f"k must be >= 3, got {k}")
    tail = [(1, 2, 3)] * (k - 3)
    A = tuple(itertools.product((1,), (0,), (1, 2), *tail))
    A_bar = tuple(itertools.product((1,), (1, 2), (0,), *tail))
    return TupleFamily(k, A, A_bar)


@dataclass(frozen=True)
class ExtremalTree:
    k: int
    graph: Graph
    labels: tuple[LabeledVertex, ...]
    coloring: Coloring
    predicted: tuple[CodeVector, ...]
    family: TupleFamily

    def vertex_of(self, label: LabeledVertex | str) -> int:
        if isinstance(label, str):
            label = parse_label(label)
        try:
            return self._index[label]
        except KeyError:
            raise ExtremalInputError(f"T_{self.k} has no vertex {label}") from None

    @property
    def _index(self) -> dict[LabeledVertex, int]:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {lab: v for v, lab in enumerate(self.labels)}
            object.__setattr__(self, "_idx", idx)
        return idx


def _side_roles(barred: bool) -> tuple[Role, Role, Role]:
    if barred:
        return Role.Y_BAR, Role.Z_BAR, Role.XSUB_BAR
    return Role.Y, Role.Z, Role.XSUB


def _color_of(lab: LabeledVertex) -> int:
    role = lab.role
    if role is Role.X or role in (Role.XSUB, Role.XSUB_BAR):
        return 1
    if role is Role.Y:
        return 2
    if role is Role.Y_BAR:
        return 3
    # z_i^3 -> 3, zbar_i^2 -> 2, z_i^t -> t for t >= 4
    return lab.t


def _predicted_code(lab: LabeledVertex, fam: TupleFamily) -> CodeVector:
    k = fam.k
    e = CodeVector.ones(k)
    if lab.role is Role.X:
        return CodeVector((0, 1, 1) + (2,) * (k - 3))
    alpha = CodeVector((fam.A_bar if lab.role.barred else fam.A)[lab.i - 1])
    if lab.role in (Role.Y, Role.Y_BAR):
        return alpha
    e1 = CodeVector.basis(k, 1)
    et = CodeVector.basis(k, lab.t)
    if lab.role in (Role.XSUB, Role.XSUB_BAR):
        return alpha + e - 2 * e1 - 2 * et
    if alpha[lab.t - 1] == 1:
        return alpha + e - 2 * et
    return alpha + 2 * e - 2 * e1 - 4 * et


def build_extremal_tree(k: int) -> ExtremalTree:
    fam = tuple_family(k)
    labels: list[LabeledVertex] = [LabeledVertex(Role.X)]
    edges: list[tuple[int, int]] = []

    sides = ((False, fam.A), (True, fam.A_bar))
    y_id: dict[tuple[bool, int], int] = {}
    for barred, tuples in sides:
        y_role = _side_roles(barred)[0]
        for i in range(1, len(tuples) + 1):
            y_id[barred, i] = len(labels)
            edges.append((0, len(labels)))
            labels.append(LabeledVertex(y_role, i))

    for barred, tuples in sides:
        _, z_role, x_role = _side_roles(barred)
        for i, alpha in enumerate(tuples, start=1):
            y = y_id[barred, i]
            for t in range(2, k + 1):
                val = alpha[t - 1]
                if val == 1:
                    edges.append((y, len(labels)))
                    labels.append(LabeledVertex(z_role, i, t))
                elif val == 2 and t >= 4:
                    xs = len(labels)
                    labels.append(LabeledVertex(x_role, i, t))
                    labels.append(LabeledVertex(z_role, i, t))
                    edges.append((y, xs))
                    edges.append((xs, xs + 1))

    graph = build_graph(len(labels), edges)
    coloring = Coloring(k, [_color_of(lab) for lab in labels])
    predicted = tuple(_predicted_code(lab, fam) for lab in labels)
    return ExtremalTree(k, graph, tuple(labels), coloring, predicted, fam)


def predicted_color_codes(tree: ExtremalTree) -> list[CodeVector]:
    """Closed-form color codes of T_k under f_k, indexed by vertex id."""
    return [_predicted_code(lab, tree.family) for lab in tree.labels]


@dataclass(frozen=True)
class ConstructionReport:
    k: int
    vertex_count: int
    is_tree: bool
    max_degree: int
    expected_max_degree: int
    locating: bool
    codes_match: bool

    @property
    def ok(self) -> bool:
        return (
            self.is_tree
            and self.max_degree == self.expected_max_degree
            and self.locating
            and self.codes_match
        )


def verify_construction(k: int) -> ConstructionReport:
    """Build T_k and check it from scratch; raise VerificationError on the first failure."""
    if not 3 <= k <= MAX_VERIFY_K:
        raise ExtremalInputError(f"k must lie in [3, {MAX_VERIFY_K}], got {k}")
    tree = build_extremal_tree(k)
    g = tree.graph
    if not is_tree(g):
        raise VerificationError(f"T_{k} is not a tree")
    delta = max_degree(g)
    if delta != new_bound(k):
        raise VerificationError(f"T_{k} has maximum degree {delta}, expected {new_bound(k)}")
    if g.degree(0) != delta:
        raise VerificationError(f"maximum degree of T_{k} is not attained at x", 0, "x")
    verdict = is_locating(g, tree.coloring)
    if not verdict:
        v = (verdict.edge or verdict.pair)[0]
        raise VerificationError(
            f"f_{k} is not locating: {verdict.describe()}", v, str(tree.labels[v])
        )
    computed = color_codes(g, tree.coloring)
    for v, (want, got) in enumerate(zip(predicted_color_codes(tree), computed)):
        if want != got:
            lab = str(tree.labels[v])
            raise VerificationError(f"{lab}: predicted {want!r}, computed {got!r}", v, lab)
    return ConstructionReport(
        k=k,
        vertex_count=g.vertex_count,
        is_tree=True,
        max_degree=delta,
        expected_max_degree=new_bound(k),
        locating=True,
        codes_match=True,
    )


def load_table1() -> list[tuple[str, tuple[int, ...]]]:
    """The (label, code) rows of the published T_5 code table."""
    text = resources.files("loccolor").joinpath("data/table1_t5.txt").read_text()
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        label, *code = line.split()
        rows.append((label, tuple(int(c) for c in code)))
    return rows

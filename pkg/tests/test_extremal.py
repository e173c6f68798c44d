import pytest

from loccolor.bounds import new_bound, tree_degree_lower_bound
from loccolor.coloring import color_codes, is_locating
from loccolor.extremal import (
    ExtremalInputError,
    LabeledVertex,
    Role,
    build_extremal_tree,
    load_table1,
    parse_label,
    predicted_color_codes,
    tuple_family,
    verify_construction,
)
from loccolor.graph import is_tree, max_degree


def test_tuple_family_k5():
    fam = tuple_family(5)
    assert fam.A[0] == (1, 0, 1, 1, 1)
    assert fam.A[14] == (1, 0, 2, 2, 3)
    assert fam.A_bar[17] == (1, 2, 0, 3, 3)
    assert len(fam.A) == len(fam.A_bar) == 18


def test_tuple_family_k3():
    fam = tuple_family(3)
    assert fam.A == ((1, 0, 1), (1, 0, 2))
    assert fam.A_bar == ((1, 1, 0), (1, 2, 0))


@pytest.mark.parametrize("k", range(3, 8))
def test_tuple_family_shape(k):
    fam = tuple_family(k)
    assert len(fam.A) == len(fam.A_bar) == 2 * 3 ** (k - 3)
    assert list(fam.A) == sorted(fam.A) and list(fam.A_bar) == sorted(fam.A_bar)
    assert not set(fam.A) & set(fam.A_bar)
    assert fam.A[-1] == (1, 0, 2) + (3,) * (k - 3)
    assert fam.A_bar[-1] == (1, 2, 0) + (3,) * (k - 3)


def test_tuple_family_k6_count():
    # 2 * 3^3 by direct enumeration of the factors
    count = sum(1 for a in (1, 2) for _ in range(27))
    assert len(tuple_family(6).A) == count == 54


def test_tuple_family_rejects_small_k():
    with pytest.raises(ExtremalInputError):
        tuple_family(2)
    with pytest.raises(ExtremalInputError):
        build_extremal_tree(2)


def _expected_size(k):
    """Vertex count from the existence rules, one side at a time."""
    per_side = 0
    for alpha in tuple_family(k).A:
        per_side += 1  # y_i
        per_side += alpha[2] == 1  # z_i^3
        for t in range(4, k + 1):
            per_side += {1: 1, 2: 2, 3: 0}[alpha[t - 1]]
    return 1 + 2 * per_side


def test_t5_size(t5):
    # per side: 18 y + 9 pendant z^3 + 24 z at t in {4,5} + 12 x_i^t
    assert t5.graph.vertex_count == 127 == _expected_size(5)
    assert t5.graph.edge_count == 126


@pytest.mark.parametrize("k", range(3, 9))
def test_sizes_follow_rules(k):
    assert build_extremal_tree(k).graph.vertex_count == _expected_size(k)


def test_t3_exact():
    t = build_extremal_tree(3)
    assert [str(lab) for lab in t.labels] == ["x", "y_1", "y_2", "ybar_1", "ybar_2", "z_1^3", "zbar_1^2"]
    assert max_degree(t.graph) == 4
    assert bool(is_locating(t.graph, t.coloring))
    codes = color_codes(t.graph, t.coloring)
    assert sorted(codes) == sorted([(0, 1, 1), (1, 0, 1), (1, 0, 2), (1, 1, 0), (1, 2, 0), (2, 1, 0), (2, 0, 1)])


def test_t5_degree(t5):
    assert max_degree(t5.graph) == 36 == t5.graph.degree(t5.vertex_of("x"))


def test_coloring_table(t5):
    col = dict(zip((str(l) for l in t5.labels), t5.coloring.colors))
    assert col["x"] == 1
    assert col["y_7"] == 2 and col["ybar_7"] == 3
    assert col["z_1^3"] == 3 and col["zbar_1^2"] == 2
    assert col["x_2^5"] == 1 and col["xbar_2^5"] == 1
    assert col["z_2^5"] == 5 and col["zbar_10^4"] == 4


def test_existence_rules(t5):
    labels = set(t5.labels)
    fam = t5.family
    for i, alpha in enumerate(fam.A, start=1):
        assert (LabeledVertex(Role.Z, i, 3) in labels) == (alpha[2] == 1)
        for t in (4, 5):
            assert (LabeledVertex(Role.Z, i, t) in labels) == (alpha[t - 1] in (1, 2))
            assert (LabeledVertex(Role.XSUB, i, t) in labels) == (alpha[t - 1] == 2)
    for i, alpha in enumerate(fam.A_bar, start=1):
        assert (LabeledVertex(Role.Z_BAR, i, 2) in labels) == (alpha[1] == 1)


def test_ids_ordered_x_then_y_then_ybar(t5):
    roles = [lab.role for lab in t5.labels[:37]]
    assert roles == [Role.X] + [Role.Y] * 18 + [Role.Y_BAR] * 18


@pytest.mark.parametrize(
    "label, code",
    [("z_1^4", (2, 1, 2, 0, 2)), ("x_2^5", (0, 1, 2, 2, 1)), ("z_2^5", (1, 2, 3, 3, 0))],
)
def test_predicted_examples(t5, label, code):
    assert predicted_color_codes(t5)[t5.vertex_of(label)] == code


@pytest.mark.parametrize("k", range(3, 9))
def test_prediction_matches_bfs(k):
    tree = build_extremal_tree(k)
    assert predicted_color_codes(tree) == color_codes(tree.graph, tree.coloring)


def test_y_codes_are_alphas(t5):
    codes = color_codes(t5.graph, t5.coloring)
    for i, alpha in enumerate(t5.family.A, start=1):
        assert codes[t5.vertex_of(f"y_{i}")] == alpha
    for i, alpha in enumerate(t5.family.A_bar, start=1):
        assert codes[t5.vertex_of(f"ybar_{i}")] == alpha


def test_hand_derived_codes(t5):
    codes = color_codes(t5.graph, t5.coloring)
    alpha15 = t5.family.A[14]
    z = codes[t5.vertex_of("z_15^4")]
    assert z == tuple(a + d for a, d in zip(alpha15, (0, 2, 2, -2, 2)))
    alpha4 = t5.family.A[3]
    assert codes[t5.vertex_of("z_4^3")] == tuple(a + d for a, d in zip(alpha4, (1, 1, -1, 1, 1)))


@pytest.mark.parametrize("k", [3, 4, 5])
def test_verify_construction(k):
    rep = verify_construction(k)
    assert rep.ok and rep.max_degree == new_bound(k)


def test_verify_guard():
    with pytest.raises(ExtremalInputError):
        verify_construction(10)


def test_table1_replay(t5):
    rows = load_table1()
    assert len(rows) == 127
    codes = color_codes(t5.graph, t5.coloring)
    for label, code in rows:
        assert codes[t5.vertex_of(label)] == code, label


def test_table1_columns_are_color_classes(t5):
    # a row's code has its zero where the vertex's color is
    for label, code in load_table1():
        assert code.index(0) + 1 == t5.coloring.colors[t5.vertex_of(label)]


@pytest.mark.parametrize("text", ["x", "y_3", "ybar_18", "z_15^4", "zbar_1^2", "x_2^5", "xbar_17^5"])
def test_label_roundtrip(text):
    assert str(parse_label(text)) == text


@pytest.mark.parametrize("text", ["w_1", "y_1^2", "z_3", "xbar", "ybar"])
def test_label_rejects(text):
    with pytest.raises(ExtremalInputError):
        parse_label(text)


def test_missing_label(t5):
    with pytest.raises(ExtremalInputError):
        t5.vertex_of("z_3^5")  # alpha_3(5) = 3, so no such vertex


@pytest.mark.parametrize("k", range(3, 9))
def test_tightness_pair(k):
    tree = build_extremal_tree(k)
    assert is_tree(tree.graph)
    assert tree_degree_lower_bound(max_degree(tree.graph)) == k
    assert bool(is_locating(tree.graph, tree.coloring)) and tree.coloring.k == k

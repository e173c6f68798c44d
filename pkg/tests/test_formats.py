import pytest

from loccolor.coloring import Coloring
from loccolor.formats import (
    ParseError,
    coloring_from_json,
    coloring_to_json,
    format_edge_list,
    parse_coloring,
    parse_edge_list,
    to_dot,
)
from loccolor.graph import cycle_graph, path_graph


def test_edge_list_roundtrip():
    g = cycle_graph(5)
    assert parse_edge_list(format_edge_list(g)) == g


def test_edge_list_comments_and_whitespace():
    text = "# a path\n3 2  # header\n0 1\n\n  1\t2\n"
    assert parse_edge_list(text) == path_graph(3)


@pytest.mark.parametrize("text, line, column", [
    ("", 1, 1),
    ("3\n", 1, 1),
    ("3 1\n0 x\n", 2, 3),
    ("3 1\n0 5\n", 2, 3),
    ("3 1\n1 1\n", 2, 1),
    ("3 2\n0 1\n", 3, 1),
    ("3 1\n0 1 2\n", 2, 1),
])
def test_edge_list_errors(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_coloring_json_roundtrip():
    f = Coloring(3, [1, 2, 3, 1])
    assert coloring_from_json(coloring_to_json(f)) == f
    assert coloring_to_json(f) == '{"k": 3, "colors": [1, 2, 3, 1]}'


def test_coloring_lines():
    assert parse_coloring("0 1\n1 2\n2 1\n", 3) == Coloring(2, [1, 2, 1])
    with pytest.raises(ParseError):
        parse_coloring("0 1\n2 1\n", 3)
    with pytest.raises(ParseError):
        parse_coloring("0 0\n", 1)
    with pytest.raises(ParseError):
        parse_coloring("0 1\n0 2\n", 1)


def test_coloring_json_errors():
    with pytest.raises(ParseError):
        coloring_from_json("{bad")
    with pytest.raises(ParseError):
        coloring_from_json('{"k": 2, "colors": [1, 5]}')
    with pytest.raises(ParseError):
        coloring_from_json('{"k": 2}')


def test_dot_output(t5):
    dot = to_dot(t5.graph, t5.coloring, t5.predicted, t5.labels, "T5")
    assert dot.startswith("graph T5 {")
    assert dot.count(" -- ") == 126
    assert 'tooltip="(0,1,1,2,2)"' in dot
    assert 'label="zbar_9^2"' in dot

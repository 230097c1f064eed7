import pytest
from hypothesis import given, settings

from graphmonads.errors import LoopEdge, ParseError
from graphmonads.families import path_graph, square_with_chord
from graphmonads.graph import make_graph
from graphmonads.io import parse_edge_list, serialize_edge_list, to_dot
from graphmonads.labels import Atom
from graphmonads.matching import T_on_objects

from test_graph import small_graphs


def test_parse_path():
    assert parse_edge_list("a b\nb c") == path_graph(3)


def test_comments_blank_lines_and_header():
    text = "# a graph\n\nvertices: a b c d z\na b\n  # indented comment\nb c\n"
    g = parse_edge_list(text)
    assert Atom("z") in g.vertices and g.degree(Atom("z")) == 0
    assert g.size == 2 and g.order == 5


def test_loop_error_reports_line():
    with pytest.raises(LoopEdge) as exc:
        parse_edge_list("a a")
    assert exc.value.line == 1


def test_malformed_line_reports_line():
    with pytest.raises(ParseError) as exc:
        parse_edge_list("a b\n\nb c d\n")
    assert exc.value.line == 3


def test_bad_token_reports_line():
    with pytest.raises(ParseError) as exc:
        parse_edge_list("a b\n{a b\n")
    assert exc.value.line == 2


def test_serialize_is_canonical():
    t1 = "c b\nb a\n"
    t2 = "vertices: c\na b\nb c\n"
    assert serialize_edge_list(parse_edge_list(t1)) == serialize_edge_list(parse_edge_list(t2))
    assert serialize_edge_list(parse_edge_list(t1)) == "vertices: a b c\na b\nb c\n"


@settings(max_examples=50, deadline=None)
@given(small_graphs())
def test_round_trip(g):
    text = serialize_edge_list(g)
    assert parse_edge_list(text) == g
    assert serialize_edge_list(parse_edge_list(text)) == text


def test_structured_labels_round_trip():
    tg = T_on_objects(square_with_chord())
    assert parse_edge_list(serialize_edge_list(tg)) == tg


def test_dot_canonical_and_decorated():
    g = square_with_chord()
    dot = to_dot(g)
    assert dot.startswith("graph {") and dot.rstrip().endswith("}")
    assert dot == to_dot(make_graph("dcba", [("c", "a"), ("b", "a"), ("d", "b"), ("d", "c"), ("c", "b")]))
    a, b, c, d = (Atom(x) for x in "abcd")
    decorated = to_dot(g, matching={a: b, b: a, c: d, d: c})
    assert decorated.count("penwidth=3") == 2
    tri = to_dot(g, triples=[(a, b, c)])
    assert tri.count('label="t0"') == 3

import pytest
from hypothesis import given

from digraph_pfd import (
    cartesian_skeleton,
    export_dot,
    parse_edge_list,
    serialize_edge_list,
    strong_product,
)
from digraph_pfd.errors import (
    ArityMismatchError,
    LoopArcError,
    ParseError,
    VertexOutOfRangeError,
)

from helpers import p2
from strategies import digraphs


def test_parse_single_arc():
    assert parse_edge_list("2 1\n0 1\n") == p2()


def test_parse_reports_loop_with_line():
    with pytest.raises(LoopArcError, match="line 2"):
        parse_edge_list("2 1\n0 0\n")


def test_parse_reports_range_with_line():
    with pytest.raises(VertexOutOfRangeError, match="line 3"):
        parse_edge_list("2 2\n0 1\n0 5\n")


def test_parse_rejects_bad_tokens():
    with pytest.raises(ParseError, match="line 1"):
        parse_edge_list("x y\n")
    with pytest.raises(ParseError, match="line 2"):
        parse_edge_list("2 1\n0 1 2\n")


def test_parse_rejects_missing_header():
    with pytest.raises(ParseError):
        parse_edge_list("# nothing here\n")


def test_parse_rejects_arity_mismatch():
    with pytest.raises(ArityMismatchError):
        parse_edge_list("2 2\n0 1\n")


def test_comments_and_blanks_ignored():
    text = "# fixture\n\n2 1\n# body\n0 1\n\n"
    assert parse_edge_list(text) == p2()


def test_serialize_is_sorted_and_stable():
    g = strong_product([p2(), p2()]).graph
    out = serialize_edge_list(g)
    assert out == "4 5\n0 1\n0 2\n0 3\n1 3\n2 3\n"
    assert serialize_edge_list(parse_edge_list(out)) == out


@given(digraphs())
def test_round_trip(g):
    assert parse_edge_list(serialize_edge_list(g)) == g


def test_normalization():
    messy = "# c\n2 1\n\n0   1\n"
    assert serialize_edge_list(parse_edge_list(messy)) == "2 1\n0 1\n"


def test_dot_plain():
    out = export_dot(p2())
    assert out == "digraph G {\n  0;\n  1;\n  0 -> 1;\n}\n"


def test_dot_with_skeleton_overlay():
    cg = strong_product([p2(), p2()])
    removed = [arc for arc, _ in cartesian_skeleton(cg.graph).removed]
    out = export_dot(cg, dispensable=removed)
    assert "0 -> 3 [color=gray, style=dashed];" in out
    assert "0 -> 1 [color=blue];" in out
    assert "0 -> 2 [color=black];" in out


def test_dot_deterministic():
    cg = strong_product([p2(), p2()])
    assert export_dot(cg) == export_dot(strong_product([p2(), p2()]))

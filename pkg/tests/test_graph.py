from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hamcircuit.graph import (
    DirectedArc,
    Graph,
    GraphError,
    adjacency_table,
    directed_arcs,
    has_edge,
    parse_graph,
    render_graph,
)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(2, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def test_parse_k4(k4):
    assert (k4.n, k4.m) == (4, 6)
    assert k4 == Graph.complete(4)


def test_parse_triangle(triangle):
    assert (triangle.n, triangle.m) == (3, 3)
    assert triangle.edges == {(0, 1), (1, 2), (0, 2)}


def test_parse_ignores_comments_blank_lines_and_crlf():
    g = parse_graph("# header comment\r\n\r\n3 2\r\n# mid\r\n1 2\r\n\r\n2 3\r\n")
    assert g.edges == {(0, 1), (1, 2)}


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("3 1\n2 2", 2, "self-loop"),
        ("3 2\n1 2\n2 1", 3, "duplicate"),
        ("3 1\n1 4", 2, "out of range"),
        ("3 1\n0 1", 2, "out of range"),
        ("x y\n1 2", 1, "two integers"),
        ("1 0", 1, "header"),
        ("3 1 7", 1, "two integers"),
    ],
)
def test_parse_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(GraphError, match=fragment) as info:
        parse_graph(text)
    assert info.value.line == line


def test_parse_edge_count_mismatch():
    with pytest.raises(GraphError, match="declares 2 edges"):
        parse_graph("3 2\n1 2")


def test_parse_missing_header():
    with pytest.raises(GraphError, match="missing header"):
        parse_graph("# nothing\n")


def test_from_edges_validates():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])


def test_directed_arcs_triangle(triangle):
    assert directed_arcs(triangle) == [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]
    assert [a.ascending for a in directed_arcs(triangle)] == [True, False] * 3


def test_directed_arcs_k4_and_empty(k4):
    assert len(directed_arcs(k4)) == 12
    assert directed_arcs(Graph(3)) == []


def test_has_edge_examples(k4, triangle, pentagon_chord):
    assert has_edge(k4, 0, 3)
    assert not has_edge(triangle, 0, 0)
    assert not has_edge(pentagon_chord, 1, 3)
    with pytest.raises(IndexError):
        has_edge(triangle, 0, 3)


def test_table_one_for_k5():
    expected = (
        "\t12\t13\t14\t15\n"
        "21\t\t23\t24\t25\n"
        "31\t32\t\t34\t35\n"
        "41\t42\t43\t\t45\n"
        "51\t52\t53\t54\t\n"
    )
    assert adjacency_table(Graph.complete(5)) == expected


def test_table_small_cases(triangle):
    grid = adjacency_table(triangle)
    assert sum(1 for cell in grid.replace("\n", "\t").split("\t") if cell) == 6
    assert adjacency_table(Graph(2)) == "\t\n\t\n"


@given(graphs())
def test_arcs_double_the_edges(g):
    arcs = directed_arcs(g)
    assert len(arcs) == 2 * g.m
    assert sorted(a.reversed() for a in arcs) == sorted(arcs)
    assert all(isinstance(a, DirectedArc) for a in arcs)


@given(graphs())
def test_has_edge_symmetric(g):
    for u, v in product(range(g.n), repeat=2):
        assert has_edge(g, u, v) == has_edge(g, v, u)


@given(graphs())
def test_render_roundtrip(g):
    assert parse_graph(render_graph(g)) == g
    assert parse_graph(render_graph(g)).fingerprint() == g.fingerprint()

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bipartify.errors import IndexOutOfRange, MissingEdge, ParseError, SelfLoop
from bipartify.graph import (
    Bipartition,
    X,
    Y,
    complete_graph,
    connected_components,
    cut_report,
    cycle_graph,
    ext_int_degrees,
    from_edge_list,
    is_connected,
    parse_edge_list,
    path_graph,
    read_edge_list,
    remove_edge,
    two_color,
    write_edge_list,
)

from conftest import DATA, EXAMPLE_EDGES, graphs, one_based_partition
from oracles import has_odd_cycle


def test_from_edge_list_example(example_graph):
    assert example_graph.n == 5
    assert example_graph.edges == tuple(EXAMPLE_EDGES)
    assert example_graph.adjacency[0] == (1, 2, 4)


def test_single_vertex_and_dedup():
    g = from_edge_list(1, [])
    assert (g.n, g.m) == (1, 0)
    g = from_edge_list(3, [(0, 1), (1, 0), (1, 2)])
    assert g.edges == ((0, 1), (1, 2))


def test_from_edge_list_errors():
    with pytest.raises(IndexOutOfRange):
        from_edge_list(3, [(0, 3)])
    with pytest.raises(SelfLoop):
        from_edge_list(3, [(1, 1)])


def test_is_connected(example_graph):
    assert is_connected(example_graph)
    assert not is_connected(from_edge_list(2, []))
    assert is_connected(from_edge_list(1, []))


def test_two_color():
    b = two_color(path_graph(3))
    assert b.X == {0, 2} and b.Y == {1}
    assert two_color(complete_graph(3)) is None


def test_two_color_example_has_triangle(example_graph):
    assert two_color(example_graph) is None


def test_cut_report_worked_example(example_graph):
    assert cut_report(example_graph, one_based_partition([1, 3])).r_b == Fraction(2, 3)
    assert cut_report(example_graph, one_based_partition([2, 3, 5])).r_b == Fraction(5, 6)
    all_x = Bipartition((X,) * 5)
    rep = cut_report(example_graph, all_x)
    assert rep.r_b == 0 and rep.internal == 6


def test_cut_report_edgeless_is_one():
    assert cut_report(from_edge_list(3, []), Bipartition((X, Y, X))).r_b == 1


def test_ext_int_degrees(example_graph):
    b = one_based_partition([1, 2])
    assert ext_int_degrees(example_graph, b, 0) == (2, 1)
    assert ext_int_degrees(example_graph, b, 2) == (1, 2)
    assert ext_int_degrees(from_edge_list(2, []), Bipartition((X, Y)), 1) == (0, 0)


def test_remove_edge():
    g = complete_graph(3)
    h = remove_edge(g, (1, 0))
    assert h.edges == ((0, 2), (1, 2))
    assert g.m == 3
    assert two_color(h) is not None
    assert remove_edge(from_edge_list(2, [(0, 1)]), (0, 1)).m == 0
    with pytest.raises(MissingEdge):
        remove_edge(h, (0, 1))


def test_remove_triangle_chord_makes_example_bipartite(example_graph):
    # edge (3,5) in 1-based labels: every odd cycle of the example uses it
    h = remove_edge(example_graph, (2, 4))
    assert not has_odd_cycle(h.n, h.edges)
    assert two_color(h) is not None
    for e in example_graph.edges:
        if e != (2, 4):
            g2 = remove_edge(example_graph, e)
            assert has_odd_cycle(g2.n, g2.edges)
            assert two_color(g2) is None


def test_connected_components(example_graph):
    assert connected_components(example_graph) == [[0, 1, 2, 3, 4]]
    assert connected_components(from_edge_list(4, [(0, 1), (2, 3)])) == [[0, 1], [2, 3]]
    assert connected_components(from_edge_list(3, [])) == [[0], [1], [2]]


def test_edge_list_round_trip(tmp_path, example_graph):
    path = tmp_path / "g.edges"
    write_edge_list(example_graph, path, header="model=test")
    text = path.read_text()
    assert text.startswith("# model=test\n5 6\n0 1\n")
    assert read_edge_list(path) == example_graph
    assert read_edge_list(f"{DATA}/example21.edges") == example_graph


@pytest.mark.parametrize("text", ["", "3\n", "3 2\n0 1\n", "2 1\n0 x\n", "2 1\n0 1 2\n"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_edge_list(text)


@given(graphs(max_n=9))
def test_cut_identity_and_label_swap(g):
    b = Bipartition(tuple((v * 7 + 3) % 2 for v in range(g.n)))
    rep = cut_report(g, b)
    assert rep.crossing + rep.internal == g.m
    assert 0 <= rep.r_b <= 1
    assert cut_report(g, b.swapped()) == rep


@given(graphs(max_n=9))
def test_two_color_agrees_with_odd_cycle_search(g):
    coloring = two_color(g)
    assert (coloring is not None) == (not has_odd_cycle(g.n, g.edges))
    if coloring is not None:
        assert all(coloring.sides[u] != coloring.sides[v] for u, v in g.edges)


@given(graphs(max_n=9))
def test_from_edge_list_idempotent(g):
    assert from_edge_list(g.n, g.edges) == g
    assert from_edge_list(g.n, [(v, u) for u, v in g.edges]) == g
    assert parse_edge_list(g.to_text()) == g


@given(graphs(max_n=8), st.data())
def test_ext_int_sum_is_degree(g, data):
    b = Bipartition(tuple(data.draw(st.lists(st.sampled_from([X, Y]),
                                             min_size=g.n, max_size=g.n))))
    for u in range(g.n):
        ext, internal = ext_int_degrees(g, b, u)
        assert ext + internal == g.degree(u)


def test_cycle_parity():
    assert two_color(cycle_graph(6)) is not None
    assert two_color(cycle_graph(7)) is None

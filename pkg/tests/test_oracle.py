import math

import numpy as np
import pytest
from hypothesis import given

from bipartify.errors import TooLarge
from bipartify.graph import (
    Bipartition,
    complete_graph,
    cut_report,
    cycle_graph,
    from_edge_list,
    is_bipartite,
)
from bipartify.oracle import gray_code_cuts, max_cut_exact

from conftest import connected_test_graphs, graphs
from oracles import brute_max_cut


def test_example_oracle(example_graph):
    res = max_cut_exact(example_graph)
    assert res.max_cut == 5 and str(res.r_b_opt) == "5/6"
    assert res.witness.X == {0, 3} and res.min_removals == 1
    assert cut_report(example_graph, res.witness).crossing == 5


def test_small_known_values():
    assert max_cut_exact(complete_graph(4)).max_cut == 4
    assert max_cut_exact(cycle_graph(5)).max_cut == 4
    assert max_cut_exact(complete_graph(5)).max_cut == 6
    assert max_cut_exact(from_edge_list(1, [])).r_b_opt == 1


def test_too_large():
    with pytest.raises(TooLarge):
        max_cut_exact(from_edge_list(27, []))


@given(graphs(min_n=1, max_n=10))
def test_matches_brute_force(g):
    res = max_cut_exact(g)
    assert res.max_cut == brute_max_cut(g.n, g.edges)
    assert res.witness.sides[0] == 0
    assert cut_report(g, res.witness).crossing == res.max_cut


@given(graphs(min_n=2, max_n=10))
def test_bounds(g):
    res = max_cut_exact(g)
    assert 2 * res.max_cut >= g.m
    assert (res.max_cut == g.m) == is_bipartite(g)


def test_edwards_bound_connected():
    for g in connected_test_graphs(31, 100, max_n=12):
        res = max_cut_exact(g)
        assert res.max_cut >= g.m / 2 + (g.n - 1) / 4 - 1e-9


def test_witness_is_lexicographically_smallest():
    # C4 has two optima with vertex 0 in X: only {0,2} vs {1,3}; the witness puts 0,2 in X
    assert max_cut_exact(cycle_graph(4)).witness.sides == (0, 1, 0, 1)
    g = from_edge_list(3, [(0, 1)])
    assert max_cut_exact(g).witness.sides == (0, 1, 0)


def test_incremental_cuts_match_scratch():
    rng = np.random.default_rng(0)
    n = 12
    g = from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4])
    trace = gray_code_cuts(g, 2 ** (n - 1))
    picks = rng.choice(len(trace), 100, replace=False)
    for k in picks:
        part, cut = trace[int(k)]
        assert cut_report(g, part).crossing == cut
    assert max(c for _, c in trace) == max_cut_exact(g).max_cut
    assert len({p.sides for p, _ in trace}) == 2 ** (n - 1)

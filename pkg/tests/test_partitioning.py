from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bipartify.graph import (
    Bipartition,
    X,
    Y,
    complete_graph,
    cut_report,
    cycle_graph,
    ext_int_degrees,
)
from bipartify.partitioning import (
    Method,
    eigen_sign_partition,
    local_switching,
    movement_routine,
    sign_partition,
)

from conftest import graphs, one_based_partition, random_connected_bipartite
from oracles import brute_max_cut


def test_worked_example_movement(example_graph):
    final, moves = movement_routine(example_graph, one_based_partition([1, 2]), X, return_moves=True)
    assert final.X == {0, 2} and final.Y == {1, 3, 4}  # X={1,3}, Y={2,4,5} in 1-based labels
    assert moves == [1, 2]
    assert cut_report(example_graph, final).r_b == Fraction(2, 3)


def test_fixed_point_unchanged(example_graph):
    best = one_based_partition([2, 3, 5])
    assert movement_routine(example_graph, best, X) == best
    assert movement_routine(example_graph, best, Y) == best


def test_k2_both_in_x():
    g = complete_graph(2)
    out = movement_routine(g, Bipartition((X, X)), X)
    assert cut_report(g, out).r_b == 1


def test_local_switching_example(example_graph):
    res = local_switching(example_graph, 100, 7)
    assert res.r_b == Fraction(5, 6)
    assert res.retained_edges == 5 and res.restarts_used == 100 and res.rng_seed == 7
    assert cut_report(example_graph, res.partition).crossing == 5


@pytest.mark.parametrize("seed", range(10))
def test_local_switching_k3(seed):
    assert brute_max_cut(3, complete_graph(3).edges) == 2
    assert local_switching(complete_graph(3), 5, seed).r_b == Fraction(2, 3)


def test_local_switching_determinism(example_graph):
    assert local_switching(example_graph, 20, 3) == local_switching(example_graph, 20, 3)


def test_restarts_validation(example_graph):
    with pytest.raises(ValueError):
        local_switching(example_graph, 0, 1)


@given(graphs(min_n=2, max_n=12), st.integers(0, 2**32 - 1), st.integers(1, 3))
def test_erdos_bound(g, seed, restarts):
    if g.m == 0:
        return
    res = local_switching(g, restarts, seed)
    assert 2 * res.retained_edges >= g.m
    assert res.r_b >= Fraction(1, 2)


@given(graphs(min_n=2, max_n=12), st.data())
def test_moves_bounded_and_monotone(g, data):
    sides = data.draw(st.lists(st.sampled_from([X, Y]), min_size=g.n, max_size=g.n))
    start = data.draw(st.sampled_from([X, Y]))
    initial = Bipartition(tuple(sides))
    final, moves = movement_routine(g, initial, start, return_moves=True)
    assert len(moves) <= g.n and len(set(moves)) == len(moves)
    # replay: every move strictly increases the cut
    cur = list(sides)
    cut = cut_report(g, initial).crossing
    for u in moves:
        cur[u] = 1 - cur[u]
        new = cut_report(g, Bipartition(tuple(cur))).crossing
        assert new > cut
        cut = new
    assert tuple(cur) == final.sides
    # unmoved vertices are locally optimal at exit
    for u in range(g.n):
        if u not in moves:
            ext, internal = ext_int_degrees(g, final, u)
            assert not 2 * internal > g.degree(u)


def test_local_optimality_of_best_restart(example_graph):
    res = local_switching(example_graph, 10, 4)
    again, moves = movement_routine(example_graph, res.partition, X, return_moves=True)
    assert again == res.partition and moves == []


def test_sign_partition_zero_entries_use_coin():
    rng = np.random.default_rng(0)
    side = sign_partition(np.array([0.5, -0.5, 0.0, 1e-12]), rng)
    assert side[0] == X and side[1] == Y
    rng2 = np.random.default_rng(0)
    coins = [X if int(rng2.integers(2)) == 0 else Y for _ in range(2)]
    assert side[2:].tolist() == coins


@pytest.mark.parametrize("kind", ["A", "NL", "Q", "L"])
def test_eigen_recovers_bipartition(kind):
    rng = np.random.default_rng(17)
    for _ in range(100):
        g = random_connected_bipartite(rng, int(rng.integers(2, 15)), 0.5)
        assert eigen_sign_partition(g, kind, 0).r_b == 1


def test_eigen_c5():
    assert brute_max_cut(5, cycle_graph(5).edges) == 4
    res = eigen_sign_partition(cycle_graph(5), "A", 0)
    assert res.method is Method.EIGEN_A
    assert res.r_b == Fraction(4, 5)


@given(graphs(min_n=2, max_n=10, connected=True), st.integers(0, 1000))
def test_eigen_methods_bounded_by_oracle(g, seed):
    if g.m == 0:
        return
    best = brute_max_cut(g.n, g.edges)
    for kind in ("A", "Q", "L", "NL"):
        res = eigen_sign_partition(g, kind, seed)
        assert res.retained_edges <= best
        assert res.retained_edges == cut_report(g, res.partition).crossing


def test_method_parse():
    assert Method.parse("phinl") is Method.GREEDY_PHI_NL
    assert Method.parse("LocalSwitching") is Method.LOCAL_SWITCHING
    with pytest.raises(ValueError):
        Method.parse("nope")

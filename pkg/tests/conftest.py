import os
import sys

import numpy as np
import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from bipartify.graph import Bipartition, from_edge_list, is_connected  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

DATA = os.path.join(os.path.dirname(__file__), "data")

# Five-vertex example graph on vertices 1..5, stored 0-based.
EXAMPLE_EDGES = [(0, 1), (0, 2), (0, 4), (2, 3), (2, 4), (3, 4)]


def one_based_partition(xs, n=5):
    """Bipartition from 1-based X labels."""
    return Bipartition.from_sets(n, [v - 1 for v in xs])


@pytest.fixture
def example_graph():
    return from_edge_list(5, EXAMPLE_EDGES)


@st.composite
def graphs(draw, min_n=1, max_n=10, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = from_edge_list(n, chosen)
    if connected and not is_connected(g):
        # join components along a path through their smallest vertices
        from bipartify.graph import connected_components
        comps = connected_components(g)
        extra = [(comps[k][0], comps[k + 1][0]) for k in range(len(comps) - 1)]
        g = from_edge_list(n, list(g.edges) + extra)
    return g


def random_connected_graph(rng, n, p):
    while True:
        g = from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                               if rng.random() < p])
        if is_connected(g):
            return g


def random_connected_bipartite(rng, n, p):
    """Connected bipartite graph from a random side split (both sides non-empty)."""
    while True:
        sides = rng.integers(2, size=n)
        if sides.min() == sides.max():
            continue
        g = from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                               if sides[i] != sides[j] and rng.random() < p])
        if is_connected(g):
            return g


def connected_test_graphs(seed, count, max_n=14):
    """``count`` connected graphs, alternating bipartite and general draws."""
    rng = np.random.default_rng(seed)
    out = []
    for k in range(count):
        n = int(rng.integers(3, max_n + 1))
        p = float(rng.uniform(0.25, 0.8))
        out.append(random_connected_bipartite(rng, n, p) if k % 2
                   else random_connected_graph(rng, n, p))
    return out


# -- acceptance reporting ----------------------------------------------------

ACCEPTANCE_LINES = []


@pytest.fixture
def report():
    def _report(criterion, ok, detail=""):
        ACCEPTANCE_LINES.append(f"{criterion}: {'PASS' if ok else 'FAIL'}  {detail}")
        print(ACCEPTANCE_LINES[-1])
    return _report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

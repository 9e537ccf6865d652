"""Spectral bipartivity measures, edge bipartivity indices and greedy edge removal.

Three edge indices are provided:

``BetaEdge``
    ``1 - (beta_new(G - e) - beta_new(G))``; the greedy procedure removes the
    edge of minimum value.
``PhiA``
    Ratio built from the smallest and the Perron eigenvector of the adjacency
    matrix; ``-1/2`` on every edge of a connected bipartite graph.
``PhiNL``
    Product of endpoint entries of the top eigenvector of the normalized
    Laplacian, scaled so its largest magnitude entry is 1.

The Phi indices are evaluated per connected component, since the Perron
vector of a disconnected graph vanishes off its dominant component.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import MissingEdge, NotPositive
from .graph import (
    Bipartition,
    Edge,
    Graph,
    connected_components,
    induced_subgraph,
    is_bipartite,
    remove_edge,
    two_color,
)
from .partitioning import Method, MethodResult
from .spectral import (
    PERRON_TOL,
    MatrixKind,
    adjacency_matrix,
    spectrum,
    sym_eigen,
)

# Scores closer than this are treated as tied; ties go to the smallest edge.
TIE_TOL = 1e-10


class EdgeIndex(str, enum.Enum):
    BETA_EDGE = "BetaEdge"
    PHI_A = "PhiA"
    PHI_NL = "PhiNL"

    @classmethod
    def parse(cls, value) -> "EdgeIndex":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        aliases = {"beta": cls.BETA_EDGE, "betaedge": cls.BETA_EDGE, "betanew": cls.BETA_EDGE,
                   "phia": cls.PHI_A, "phinl": cls.PHI_NL}
        if key in aliases:
            return aliases[key]
        raise ValueError(f"unknown edge index {value!r}")


GREEDY_INDEX = {
    Method.GREEDY_BETA_NEW: EdgeIndex.BETA_EDGE,
    Method.GREEDY_PHI_A: EdgeIndex.PHI_A,
    Method.GREEDY_PHI_NL: EdgeIndex.PHI_NL,
}


@dataclass(frozen=True)
class EdgeScore:
    edge: Edge
    value: float
    index: EdgeIndex


@dataclass(frozen=True)
class RemovalTrace:
    removed: tuple[Edge, ...]
    final: Graph
    original_edges: int

    @property
    def retained_edges(self) -> int:
        return self.final.m

    @property
    def r_b(self) -> Fraction:
        if self.original_edges == 0:
            return Fraction(1)
        return Fraction(self.final.m, self.original_edges)


# -- whole-graph measures ----------------------------------------------------


def _eigenvalues(g: Graph, solver: str | None = None) -> np.ndarray:
    if solver == "jacobi":
        return sym_eigen(adjacency_matrix(g), solver).eigenvalues
    return np.linalg.eigvalsh(adjacency_matrix(g))


def beta_original(g: Graph, solver: str | None = None) -> float:
    """Weighted even closed walks over all closed walks, from the adjacency spectrum."""
    lam = _eigenvalues(g, solver)
    return float(np.cosh(lam).sum() / np.exp(lam).sum())


def beta_new(g: Graph, solver: str | None = None) -> float:
    """``sum exp(-lambda) / sum exp(lambda)``; 1 exactly for symmetric spectra."""
    lam = _eigenvalues(g, solver)
    return float(np.exp(-lam).sum() / np.exp(lam).sum())


def _beta_new_without_each_edge(g: Graph) -> np.ndarray:
    a = adjacency_matrix(g)
    e = g.edge_array
    k = np.arange(g.m)
    stack = np.repeat(a[None, :, :], g.m, axis=0)
    stack[k, e[:, 0], e[:, 1]] = 0.0
    stack[k, e[:, 1], e[:, 0]] = 0.0
    lam = np.linalg.eigvalsh(stack)
    return np.exp(-lam).sum(axis=1) / np.exp(lam).sum(axis=1)


def edge_beta(g: Graph, e: Sequence[int], solver: str | None = None) -> float:
    if not g.has_edge(*e):
        raise MissingEdge(f"edge {tuple(e)} not in graph")
    return 1.0 - (beta_new(remove_edge(g, e), solver) - beta_new(g, solver))


def edge_beta_scores(g: Graph, solver: str | None = None) -> list[EdgeScore]:
    if g.m == 0:
        return []
    base = beta_new(g, solver)
    if solver == "jacobi":
        without = [beta_new(remove_edge(g, e), solver) for e in g.edges]
    else:
        without = _beta_new_without_each_edge(g)
    return [
        EdgeScore(e, float(1.0 - (b - base)), EdgeIndex.BETA_EDGE)
        for e, b in zip(g.edges, without)
    ]


# -- eigenvector indices -----------------------------------------------------


def phi_a_values(edges, perron: np.ndarray, lowest: np.ndarray) -> np.ndarray:
    e = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    num = lowest[e[:, 0]] * lowest[e[:, 1]]
    return num / (perron[e[:, 0]] * perron[e[:, 1]] + np.abs(num))


def phi_nl_values(edges, top: np.ndarray) -> np.ndarray:
    e = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    scaled = top / np.max(np.abs(top))
    return scaled[e[:, 0]] * scaled[e[:, 1]]


def _component_scores(g: Graph, index: EdgeIndex, solver, nonbipartite_only: bool):
    scores = []
    for comp in connected_components(g):
        if len(comp) < 2:
            continue
        sub = induced_subgraph(g, comp)
        if nonbipartite_only and is_bipartite(sub):
            continue
        if index is EdgeIndex.PHI_A:
            spec = spectrum(sub, MatrixKind.ADJACENCY, solver)
            perron = spec.eigenvectors[-1]
            if np.any(perron <= PERRON_TOL):
                raise NotPositive("component Perron vector is not strictly positive")
            values = phi_a_values(sub.edges, perron, spec.eigenvectors[0])
        else:
            top = spectrum(sub, MatrixKind.NORMALIZED_LAPLACIAN, solver).eigenvectors[-1]
            values = phi_nl_values(sub.edges, top)
        for (u, v), val in zip(sub.edges, values):
            scores.append(EdgeScore((comp[u], comp[v]), float(val), index))
    scores.sort(key=lambda s: s.edge)
    return scores


def phi_a_scores(g: Graph, solver: str | None = None) -> list[EdgeScore]:
    return _component_scores(g, EdgeIndex.PHI_A, solver, nonbipartite_only=False)


def phi_nl_scores(g: Graph, solver: str | None = None) -> list[EdgeScore]:
    return _component_scores(g, EdgeIndex.PHI_NL, solver, nonbipartite_only=False)


def edge_scores(g: Graph, index, solver: str | None = None) -> list[EdgeScore]:
    index = EdgeIndex.parse(index)
    if index is EdgeIndex.BETA_EDGE:
        return edge_beta_scores(g, solver)
    return _component_scores(g, index, solver, nonbipartite_only=False)


# -- greedy removal ----------------------------------------------------------


def select_edge(scores: list[EdgeScore], maximize: bool) -> Edge:
    """Extreme score with ties (within ``TIE_TOL``) going to the smallest edge."""
    values = np.array([s.value for s in scores])
    target = values.max() if maximize else values.min()
    ok = values >= target - TIE_TOL if maximize else values <= target + TIE_TOL
    return min(s.edge for s, hit in zip(scores, ok) if hit)


def greedy_remove(g: Graph, index, solver: str | None = None) -> RemovalTrace:
    """Delete one edge at a time until every component is bipartite.

    BetaEdge removes the global minimiser over all current edges; PhiA and
    PhiNL remove the maximiser among edges of non-bipartite components.
    """
    index = EdgeIndex.parse(index)
    current = g
    removed = []
    while not is_bipartite(current):
        if index is EdgeIndex.BETA_EDGE:
            edge = select_edge(edge_beta_scores(current, solver), maximize=False)
        else:
            scores = _component_scores(current, index, solver, nonbipartite_only=True)
            edge = select_edge(scores, maximize=True)
        removed.append(edge)
        current = remove_edge(current, edge)
    return RemovalTrace(tuple(removed), current, g.m)


def greedy_method(g: Graph, method, solver: str | None = None) -> MethodResult:
    method = Method.parse(method)
    trace = greedy_remove(g, GREEDY_INDEX[method], solver)
    partition: Bipartition = two_color(trace.final)
    return MethodResult(
        method,
        partition,
        trace.retained_edges,
        trace.r_b,
        restarts_used=0,
        removed=trace.removed,
    )

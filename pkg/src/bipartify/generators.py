"""Random graph models and their parameter sampling ranges.

All generators take a ``numpy.random.Generator`` and consume it in a fixed
order, so a seed reproduces the graph exactly.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ExhaustedResampling, InvalidK, InvalidM
from .graph import Graph, from_edge_list, is_bipartite, is_connected

WS_K = 8
RG_NORM = 2
MAX_ATTEMPTS = 10_000


class Model(str, enum.Enum):
    ER = "ER"
    WS = "WS"
    RG = "RG"
    BA = "BA"

    @classmethod
    def parse(cls, value) -> "Model":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().upper())
        except ValueError:
            raise ValueError(f"unknown graph model {value!r}") from None


ALL_MODELS = tuple(Model)


@dataclass(frozen=True)
class ModelSpec:
    model: Model
    n: int
    params: dict = field(default_factory=dict)

    def params_text(self) -> str:
        return ";".join(f"{k}={v!r}" for k, v in self.params.items())


def erdos_renyi(n: int, p: float, rng) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    rng = np.random.default_rng(rng)
    iu, ju = np.triu_indices(n, 1)  # lexicographic pair order
    keep = rng.random(iu.size) < p
    return from_edge_list(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def watts_strogatz(n: int, k: int, psi: float, rng) -> Graph:
    """Ring lattice with each lattice edge's far endpoint rewired w.p. ``psi``.

    Lattice edges ``(i, i + j mod n)`` are visited for ``i`` ascending and
    then ``j = 1..k/2``. A rewired endpoint is drawn uniformly from vertices
    that create neither a self-loop nor a duplicate edge; if none exists the
    edge is kept.
    """
    if k % 2 or k >= n or k < 0:
        raise InvalidK(f"k must be even and smaller than n={n}, got {k}")
    rng = np.random.default_rng(rng)
    nbrs = [set() for _ in range(n)]
    lattice = [(i, (i + j) % n) for i in range(n) for j in range(1, k // 2 + 1)]
    for u, v in lattice:
        nbrs[u].add(v)
        nbrs[v].add(u)
    for u, v in lattice:
        if rng.random() >= psi:
            continue
        candidates = [w for w in range(n) if w != u and w not in nbrs[u]]
        if not candidates:
            continue
        w = candidates[int(rng.integers(len(candidates)))]
        nbrs[u].discard(v)
        nbrs[v].discard(u)
        nbrs[u].add(w)
        nbrs[w].add(u)
    return from_edge_list(n, [(u, w) for u in range(n) for w in nbrs[u] if u < w])


def random_geometric(n: int, r: float, rng) -> Graph:
    """Points uniform in the unit square, joined when Euclidean distance <= r."""
    if r <= 0:
        raise ValueError(f"r must be positive, got {r}")
    rng = np.random.default_rng(rng)
    pts = rng.random((n, 2))
    iu, ju = np.triu_indices(n, 1)
    dist = np.hypot(*(pts[iu] - pts[ju]).T)
    keep = dist <= r
    return from_edge_list(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def barabasi_albert(n: int, m: int, rng) -> Graph:
    """Preferential attachment from ``m`` isolated seed vertices.

    Each arriving vertex picks ``m`` distinct targets by successive draws
    proportional to current degree, renormalised over not-yet-picked
    vertices (uniform while all candidate degrees are zero).
    """
    if m < 1 or m >= n:
        raise InvalidM(f"m must satisfy 1 <= m < n={n}, got {m}")
    rng = np.random.default_rng(rng)
    deg = np.zeros(n)
    edges = []
    for t in range(m, n):
        weights = deg[:t].copy()
        targets = []
        for _ in range(m):
            total = weights.sum()
            if total > 0:
                pick = int(rng.choice(t, p=weights / total))
            else:
                free = np.flatnonzero(~np.isin(np.arange(t), targets))
                pick = int(free[rng.integers(free.size)])
            targets.append(pick)
            weights[pick] = 0.0
        for s in targets:
            edges.append((s, t))
            deg[s] += 1
        deg[t] += m
    return from_edge_list(n, edges)


def sample_params(model: Model, rng: np.random.Generator) -> dict:
    if model is Model.ER:
        return {"p": float(rng.uniform(0.2, 1.0))}
    if model is Model.WS:
        return {"psi": float(rng.uniform(0.0, 0.3)), "k": WS_K}
    if model is Model.RG:
        return {"r": float(rng.uniform(0.5, 1.0)), "l": RG_NORM}
    return {"m": int(rng.integers(1, 11))}


def generate(model, n: int, params: dict, rng) -> Graph:
    model = Model.parse(model)
    if model is Model.ER:
        return erdos_renyi(n, float(params["p"]), rng)
    if model is Model.WS:
        return watts_strogatz(n, int(params.get("k", WS_K)), float(params["psi"]), rng)
    if model is Model.RG:
        if int(params.get("l", RG_NORM)) != RG_NORM:
            raise ValueError("only the Euclidean norm (l=2) is supported")
        return random_geometric(n, float(params["r"]), rng)
    return barabasi_albert(n, int(params["m"]), rng)


def sample_instance(model, n: int, rng) -> tuple[Graph, ModelSpec]:
    """Draw parameters and a graph until it is connected and not bipartite."""
    if n < 3:
        raise ValueError("need n >= 3 for a non-bipartite simple graph")
    model = Model.parse(model)
    rng = np.random.default_rng(rng)
    for _ in range(MAX_ATTEMPTS):
        params = sample_params(model, rng)
        if model is Model.BA and params["m"] >= n:
            continue
        g = generate(model, n, params, rng)
        if is_connected(g) and not is_bipartite(g):
            return g, ModelSpec(model, n, params)
    raise ExhaustedResampling(f"{model.value}: no valid instance in {MAX_ATTEMPTS} attempts")


def clustering_coefficient(g: Graph) -> float:
    """Mean local clustering coefficient (vertices of degree < 2 count as 0)."""
    total = 0.0
    for u in range(g.n):
        nb = g.adjacency[u]
        d = len(nb)
        if d < 2:
            continue
        links = sum(1 for i, a in enumerate(nb) for b in nb[i + 1:] if g.has_edge(a, b))
        total += links / math.comb(d, 2)
    return total / g.n if g.n else 0.0

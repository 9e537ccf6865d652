"""Local switching and eigenvector sign-pattern partitions."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import kernels
from .graph import Bipartition, Edge, Graph, X, Y, crossing_count
from .spectral import MatrixKind, extremal_vector


class Method(str, enum.Enum):
    LOCAL_SWITCHING = "LocalSwitching"
    EIGEN_A = "EigenA"
    EIGEN_Q = "EigenQ"
    EIGEN_L = "EigenL"
    EIGEN_NL = "EigenNL"
    GREEDY_BETA_NEW = "GreedyBetaNew"
    GREEDY_PHI_A = "GreedyPhiA"
    GREEDY_PHI_NL = "GreedyPhiNL"

    @classmethod
    def parse(cls, value) -> "Method":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        for method in cls:
            if key in (method.value.lower(), method.name.lower()):
                return method
        if key in _ALIASES:
            return _ALIASES[key]
        raise ValueError(f"unknown method {value!r}")

    @property
    def is_greedy(self) -> bool:
        return self.value.startswith("Greedy")


_ALIASES = {
    "ls": Method.LOCAL_SWITCHING,
    "a": Method.EIGEN_A,
    "q": Method.EIGEN_Q,
    "l": Method.EIGEN_L,
    "nl": Method.EIGEN_NL,
    "beta": Method.GREEDY_BETA_NEW,
    "phia": Method.GREEDY_PHI_A,
    "phinl": Method.GREEDY_PHI_NL,
}

ALL_METHODS = tuple(Method)
PARTITION_METHODS = tuple(m for m in Method if not m.is_greedy)
GREEDY_METHODS = tuple(m for m in Method if m.is_greedy)

EIGEN_KINDS = {
    Method.EIGEN_A: MatrixKind.ADJACENCY,
    Method.EIGEN_Q: MatrixKind.SIGNLESS_LAPLACIAN,
    Method.EIGEN_L: MatrixKind.LAPLACIAN,
    Method.EIGEN_NL: MatrixKind.NORMALIZED_LAPLACIAN,
}


@dataclass(frozen=True)
class MethodResult:
    method: Method
    partition: Bipartition
    retained_edges: int
    r_b: Fraction
    restarts_used: int = 1
    rng_seed: Optional[int] = None
    removed: tuple[Edge, ...] = ()

    @property
    def r_b_float(self) -> float:
        return float(self.r_b)


def _ratio(kept: int, m: int) -> Fraction:
    return Fraction(1) if m == 0 else Fraction(kept, m)


def _seed_of(rng) -> Optional[int]:
    return int(rng) if isinstance(rng, (int, np.integer)) else None


def _run_movement(g: Graph, side: np.ndarray, start_part: int) -> list[int]:
    indptr, indices = g.csr
    moves = np.zeros(max(g.n, 1), dtype=np.int32)
    count = kernels.movement_routine(indptr, indices, side, int(start_part), moves)
    return moves[:count].tolist()


def movement_routine(
    g: Graph, initial: Bipartition, start_part: int = X, return_moves: bool = False
):
    """Move vertices of the active part whose majority of neighbours share it.

    Parts are scanned in ascending vertex order; after each single move the
    scan restarts on the other part. A moved vertex never moves again, and
    the loop ends after two consecutive scans without a move.
    """
    if initial.n != g.n:
        raise ValueError("initial partition does not match the graph")
    side = initial.as_array()
    moves = _run_movement(g, side, start_part)
    result = Bipartition.from_array(side)
    return (result, moves) if return_moves else result


def balanced_random_partition(n: int, rng: np.random.Generator) -> np.ndarray:
    perm = rng.permutation(n)
    side = np.full(n, Y, dtype=np.int8)
    side[perm[: n // 2]] = X
    return side


def local_switching(g: Graph, restarts: int = 100, rng=None) -> MethodResult:
    """Best of ``restarts`` movement runs from random balanced partitions.

    Each restart draws a vertex permutation (first ``n // 2`` vertices go to
    X) and then a random starting part. Ties keep the earliest restart.
    """
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    seed = _seed_of(rng)
    rng = np.random.default_rng(rng)
    best_side, best_cut = None, -1
    for _ in range(restarts):
        side = balanced_random_partition(g.n, rng)
        start = int(rng.integers(2))
        _run_movement(g, side, start)
        cut = crossing_count(g, side)
        if cut > best_cut:
            best_side, best_cut = side, cut
    return MethodResult(
        Method.LOCAL_SWITCHING,
        Bipartition.from_array(best_side),
        best_cut,
        _ratio(best_cut, g.m),
        restarts_used=restarts,
        rng_seed=seed,
    )


def sign_partition(vector: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Positive entries to X, negative to Y, near-zero entries by fair coin."""
    vector = np.asarray(vector, dtype=float)
    tau = 1e-8 * float(np.max(np.abs(vector))) if vector.size else 0.0
    side = np.where(vector > tau, X, Y).astype(np.int8)
    for v in np.flatnonzero(np.abs(vector) <= tau):
        side[v] = X if int(rng.integers(2)) == 0 else Y
    return side


def eigen_sign_partition(g: Graph, kind, rng=None, solver: str | None = None) -> MethodResult:
    """Sign pattern of an extremal eigenvector, refined by one movement pass from X."""
    kind = MatrixKind.parse(kind)
    seed = _seed_of(rng)
    rng = np.random.default_rng(rng)
    side = sign_partition(extremal_vector(g, kind, solver), rng)
    _run_movement(g, side, X)
    cut = crossing_count(g, side)
    method = next(m for m, k in EIGEN_KINDS.items() if k is kind)
    return MethodResult(
        method, Bipartition.from_array(side), cut, _ratio(cut, g.m), rng_seed=seed
    )

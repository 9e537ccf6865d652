"""Graph matrices and verified symmetric eigendecompositions."""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import NoConvergence, NotPositive
from .graph import Graph

RESIDUAL_TOL = 1e-8
ORTHO_TOL = 1e-8
SIGN_TOL = 1e-8
PERRON_TOL = 1e-10

# "lapack" (numpy.linalg.eigh) or "jacobi" (cyclic Jacobi kernel)
DEFAULT_SOLVER = os.environ.get("BIPARTIFY_EIGEN_SOLVER", "lapack")


class MatrixKind(str, enum.Enum):
    ADJACENCY = "A"
    SIGNLESS_LAPLACIAN = "Q"
    LAPLACIAN = "L"
    NORMALIZED_LAPLACIAN = "NL"

    @classmethod
    def parse(cls, value) -> "MatrixKind":
        if isinstance(value, cls):
            return value
        key = str(value).strip()
        for kind in cls:
            if key.upper() in (kind.value, kind.name):
                return kind
        raise ValueError(f"unknown matrix kind {value!r}")


A = MatrixKind.ADJACENCY
Q = MatrixKind.SIGNLESS_LAPLACIAN
L = MatrixKind.LAPLACIAN
NL = MatrixKind.NORMALIZED_LAPLACIAN


@dataclass(frozen=True)
class GraphMatrix:
    kind: MatrixKind
    entries: np.ndarray


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues; ``eigenvectors[k]`` belongs to ``eigenvalues[k]``."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    residual: float


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    if g.m:
        e = g.edge_array
        a[e[:, 0], e[:, 1]] = 1.0
        a[e[:, 1], e[:, 0]] = 1.0
    return a


def build_matrix(g: Graph, kind) -> GraphMatrix:
    kind = MatrixKind.parse(kind)
    a = adjacency_matrix(g)
    deg = g.degrees.astype(float)
    if kind is A:
        m = a
    elif kind is L:
        m = np.diag(deg) - a
    elif kind is Q:
        m = np.diag(deg) + a
    else:
        inv_sqrt = np.zeros(g.n)
        nz = deg > 0
        inv_sqrt[nz] = 1.0 / np.sqrt(deg[nz])
        m = -a * np.outer(inv_sqrt, inv_sqrt)
        m[np.diag_indices(g.n)] = nz.astype(float)
    return GraphMatrix(kind, m)


def canonicalize_signs(vectors: np.ndarray) -> np.ndarray:
    """Flip each row so its first entry above ``SIGN_TOL`` in magnitude is positive."""
    out = np.array(vectors, dtype=float, copy=True)
    for row in out:
        big = np.flatnonzero(np.abs(row) > SIGN_TOL)
        if big.size and row[big[0]] < 0:
            row *= -1.0
    return out


def _raw_eigh(entries: np.ndarray, solver: str):
    if solver == "lapack":
        return np.linalg.eigh(entries)
    if solver == "jacobi":
        n = entries.shape[0]
        w, v, _, converged = kernels.jacobi_eigh(
            np.ascontiguousarray(entries, dtype=np.float64), 100 * n * n, 1e-15
        )
        if not converged:
            raise NoConvergence(f"Jacobi iteration budget {100 * n * n} exhausted")
        return w, v
    raise ValueError(f"unknown eigensolver {solver!r}")


def sym_eigen(m: GraphMatrix | np.ndarray, solver: str | None = None) -> Spectrum:
    """Full eigendecomposition with residual and orthonormality checks."""
    entries = m.entries if isinstance(m, GraphMatrix) else np.asarray(m, dtype=float)
    n = entries.shape[0]
    if n == 0:
        return Spectrum(np.zeros(0), np.zeros((0, 0)), 0.0)
    w, v = _raw_eigh(entries, solver or DEFAULT_SOLVER)
    order = np.argsort(w, kind="stable")
    w = w[order]
    vecs = canonicalize_signs(v[:, order].T)

    residual = float(np.max(np.abs(entries @ vecs.T - vecs.T * w)))
    norm_inf = float(np.max(np.abs(entries).sum(axis=1)))
    if residual > RESIDUAL_TOL * max(1.0, norm_inf):
        raise NoConvergence(f"eigen residual {residual:.3e} above tolerance")
    gram_err = float(np.max(np.abs(vecs @ vecs.T - np.eye(n))))
    if gram_err > ORTHO_TOL:
        raise NoConvergence(f"eigenvectors not orthonormal (error {gram_err:.3e})")
    return Spectrum(w, vecs, residual)


def spectrum(g: Graph, kind, solver: str | None = None) -> Spectrum:
    return sym_eigen(build_matrix(g, kind), solver)


def extremal_vector(g: Graph, kind, solver: str | None = None) -> np.ndarray:
    """Eigenvector of the smallest eigenvalue (A, Q) or the largest one (L, NL)."""
    kind = MatrixKind.parse(kind)
    spec = spectrum(g, kind, solver)
    pos = 0 if kind in (A, Q) else g.n - 1
    return spec.eigenvectors[pos]


def perron_vector(g: Graph, solver: str | None = None) -> np.ndarray:
    """Strictly positive eigenvector of the largest adjacency eigenvalue."""
    vec = spectrum(g, A, solver).eigenvectors[-1]
    if np.any(vec <= PERRON_TOL):
        raise NotPositive("Perron vector has non-positive entries; is the graph connected?")
    return vec

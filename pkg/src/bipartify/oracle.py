"""Exact MAX-CUT by Gray-code enumeration of all bipartitions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .errors import TooLarge
from .graph import Bipartition, Graph

MAX_VERTICES = 26


@dataclass(frozen=True)
class OracleResult:
    max_cut: int
    witness: Bipartition
    m: int

    @property
    def r_b_opt(self) -> Fraction:
        return Fraction(1) if self.m == 0 else Fraction(self.max_cut, self.m)

    @property
    def min_removals(self) -> int:
        """Fewest edge deletions that leave a bipartite graph."""
        return self.m - self.max_cut


def adjacency_bitmasks(g: Graph) -> np.ndarray:
    """Neighbour sets as bitmasks, vertex ``v`` stored at bit ``n - 1 - v``.

    With this layout the numeric order of a side mask is the lexicographic
    order of the label sequence, so the smallest mask is the smallest witness.
    """
    masks = np.zeros(g.n, dtype=np.uint64)
    for v, nbrs in enumerate(g.adjacency):
        bits = 0
        for w in nbrs:
            bits |= 1 << (g.n - 1 - w)
        masks[v] = bits
    return masks


def mask_to_bipartition(mask: int, n: int) -> Bipartition:
    return Bipartition(tuple((int(mask) >> (n - 1 - v)) & 1 for v in range(n)))


def max_cut_exact(g: Graph) -> OracleResult:
    """Maximum cut over all ``2**(n-1)`` bipartitions with vertex 0 in X."""
    if g.n > MAX_VERTICES:
        raise TooLarge(f"exhaustive MAX-CUT limited to n <= {MAX_VERTICES}, got {g.n}")
    if g.n == 0:
        return OracleResult(0, Bipartition(()), 0)
    best, mask = kernels.gray_maxcut(adjacency_bitmasks(g), g.n)
    return OracleResult(int(best), mask_to_bipartition(mask, g.n), g.m)


def gray_code_cuts(g: Graph, limit: int) -> list[tuple[Bipartition, int]]:
    """The first ``limit`` partitions visited by the enumerator with its running cut."""
    masks, cuts = kernels.gray_trace(adjacency_bitmasks(g), g.n, limit)
    return [(mask_to_bipartition(int(s), g.n), int(c)) for s, c in zip(masks, cuts)]

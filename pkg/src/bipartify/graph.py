"""Simple undirected graphs, bipartitions, cut accounting and edge-list I/O."""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import IndexOutOfRange, MissingEdge, ParseError, SelfLoop

X = 0
Y = 1

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``edges`` is sorted, deduplicated and stores each pair as ``(u, v)`` with
    ``u < v``. Two graphs are equal iff their ``(n, edges)`` agree.
    """

    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.array([len(a) for a in self.adjacency], dtype=np.int64)

    @cached_property
    def edge_array(self) -> np.ndarray:
        if not self.edges:
            return np.zeros((0, 2), dtype=np.int64)
        return np.array(self.edges, dtype=np.int64)

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """``(indptr, indices)`` arrays in the dtypes the kernels expect."""
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        indptr[1:] = np.cumsum(self.degrees)
        indices = np.fromiter(
            (w for nbrs in self.adjacency for w in nbrs), dtype=np.int32, count=2 * self.m
        )
        return indptr, indices

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_set

    def to_text(self, header: Optional[str] = None) -> str:
        lines = []
        if header:
            lines.extend("# " + h for h in header.splitlines())
        lines.append(f"{self.n} {self.m}")
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"

    def digest(self) -> str:
        return hashlib.sha256(self.to_text().encode()).hexdigest()


def from_edge_list(n: int, raw: Iterable[Sequence[int]]) -> Graph:
    """Build a canonical graph; reversed duplicates are merged."""
    if n < 0:
        raise IndexOutOfRange(f"negative vertex count {n}")
    seen = set()
    for pair in raw:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        seen.add((u, v) if u < v else (v, u))
    edges = tuple(sorted(seen))
    nbrs = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    return Graph(n, edges, tuple(tuple(sorted(a)) for a in nbrs))


def empty_graph(n: int) -> Graph:
    return from_edge_list(n, [])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def remove_edge(g: Graph, e: Sequence[int]) -> Graph:
    u, v = sorted((int(e[0]), int(e[1])))
    if (u, v) not in g.edge_set:
        raise MissingEdge(f"edge ({u}, {v}) not in graph")
    return from_edge_list(g.n, [f for f in g.edges if f != (u, v)])


def connected_components(g: Graph) -> list[list[int]]:
    """Maximal connected vertex sets, each sorted, ordered by smallest member."""
    comp = [-1] * g.n
    out = []
    for s in range(g.n):
        if comp[s] >= 0:
            continue
        comp[s] = len(out)
        members = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if comp[w] < 0:
                    comp[w] = comp[s]
                    members.append(w)
                    queue.append(w)
        out.append(sorted(members))
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph on ``vertices`` relabelled ``0..k-1`` in the given order."""
    index = {v: i for i, v in enumerate(vertices)}
    return from_edge_list(
        len(vertices),
        [(index[u], index[v]) for u, v in g.edges if u in index and v in index],
    )


@dataclass(frozen=True)
class Bipartition:
    """Per-vertex side labels, ``0`` for X and ``1`` for Y."""

    sides: tuple[int, ...]

    @classmethod
    def from_sets(cls, n: int, xs: Iterable[int]) -> "Bipartition":
        xs = set(xs)
        return cls(tuple(X if v in xs else Y for v in range(n)))

    @classmethod
    def from_array(cls, arr) -> "Bipartition":
        return cls(tuple(int(s) for s in arr))

    @property
    def n(self) -> int:
        return len(self.sides)

    @property
    def X(self) -> frozenset:
        return frozenset(v for v, s in enumerate(self.sides) if s == X)

    @property
    def Y(self) -> frozenset:
        return frozenset(v for v, s in enumerate(self.sides) if s == Y)

    def swapped(self) -> "Bipartition":
        return Bipartition(tuple(1 - s for s in self.sides))

    def as_array(self) -> np.ndarray:
        return np.array(self.sides, dtype=np.int8)


@dataclass(frozen=True)
class CutReport:
    crossing: int
    internal: int

    @property
    def r_b(self) -> Fraction:
        total = self.crossing + self.internal
        return Fraction(1) if total == 0 else Fraction(self.crossing, total)

    @property
    def r_b_float(self) -> float:
        return float(self.r_b)


def crossing_count(g: Graph, sides) -> int:
    if g.m == 0:
        return 0
    s = np.asarray(sides)
    e = g.edge_array
    return int(np.count_nonzero(s[e[:, 0]] != s[e[:, 1]]))


def cut_report(g: Graph, b: Bipartition) -> CutReport:
    if b.n != g.n:
        raise ValueError(f"bipartition labels {b.n} vertices, graph has {g.n}")
    crossing = crossing_count(g, b.sides)
    return CutReport(crossing, g.m - crossing)


def ext_int_degrees(g: Graph, b: Bipartition, u: int) -> tuple[int, int]:
    """``(ext, int)``: neighbours of ``u`` on the other side and on its own side."""
    if not 0 <= u < g.n:
        raise IndexOutOfRange(f"vertex {u} out of range")
    own = b.sides[u]
    internal = sum(1 for w in g.adjacency[u] if b.sides[w] == own)
    return g.degree(u) - internal, internal


def two_color(g: Graph) -> Optional[Bipartition]:
    """Proper 2-colouring by BFS, or ``None`` if an odd cycle exists.

    The smallest vertex of each component is coloured X.
    """
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = X
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return Bipartition(tuple(color))


def is_bipartite(g: Graph) -> bool:
    return two_color(g) is not None


# -- edge-list files ---------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` / ``u v`` edge-list format; ``#`` lines are comments."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {stripped!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer token in {stripped!r}") from None
    if not rows:
        raise ParseError("missing 'n m' header line")
    (n, m), body = rows[0], rows[1:]
    if n < 0 or m < 0:
        raise ParseError(f"negative header values n={n} m={m}")
    if len(body) != m:
        raise ParseError(f"header declares {m} edges, found {len(body)}")
    return from_edge_list(n, body)


def read_edge_list(path) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def write_edge_list(g: Graph, path, header: Optional[str] = None) -> None:
    Path(path).write_text(g.to_text(header), encoding="utf-8")

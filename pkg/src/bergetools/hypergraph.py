"""Uniform hypergraphs, simple graphs, and the shadow/codegree machinery.

Vertices are always ``0..n-1`` and ``n`` is explicit, so isolated vertices
survive every operation. Hyperedges are stored as sorted tuples in
lexicographic order; graphs keep one adjacency bitset (a Python ``int``) per
vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph on vertex set ``range(n)``.

    ``edges`` may be given as any iterable of vertex collections; it is
    normalised to a lexicographically sorted tuple of sorted tuples.
    Duplicate edges raise ``ValueError``.
    """

    n: int
    r: int
    edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"uniformity must be at least 2, got {self.r}")
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        normalised = []
        for e in self.edges:
            edge = tuple(sorted(int(v) for v in e))
            if len(edge) != self.r or len(set(edge)) != self.r:
                raise ValueError(f"edge {edge} is not a set of {self.r} distinct vertices")
            if edge[0] < 0 or edge[-1] >= self.n:
                raise ValueError(f"edge {edge} has a vertex outside 0..{self.n - 1}")
            normalised.append(edge)
        normalised.sort()
        for a, b in zip(normalised, normalised[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(normalised))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, edge) -> bool:
        return tuple(sorted(edge)) in set(self.edges)

    def edge_masks(self) -> list[int]:
        return [sum(1 << v for v in e) for e in self.edges]

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    def with_edges(self, edges: Iterable[Sequence[int]]) -> "Hypergraph":
        return Hypergraph(self.n, self.r, tuple(edges))

    def add_edge(self, edge: Sequence[int]) -> "Hypergraph":
        return Hypergraph(self.n, self.r, self.edges + (tuple(edge),))

    def induced(self, vertices: Iterable[int]) -> "Hypergraph":
        """Sub-hypergraph of edges lying inside ``vertices``; labels are kept."""
        keep = set(vertices)
        return Hypergraph(self.n, self.r, tuple(e for e in self.edges if keep.issuperset(e)))

    def to_graph(self) -> "Graph":
        if self.r != 2:
            raise ValueError("only 2-uniform hypergraphs are graphs")
        return Graph.from_edges(self.n, self.edges)


@dataclass(frozen=True)
class Graph:
    """A simple graph on ``range(n)`` stored as adjacency bitsets."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        adj = tuple(int(a) for a in self.adj)
        if len(adj) != self.n:
            raise ValueError("need one adjacency row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"adjacency is not symmetric at ({v}, {u})")
        object.__setattr__(self, "adj", adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix) -> "Graph":
        matrix = np.asarray(matrix, dtype=bool)
        n = matrix.shape[0]
        rows = []
        for i in range(n):
            idx = np.flatnonzero(matrix[i])
            rows.append(sum(1 << int(j) for j in idx))
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabelled so ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(sum(1 << index[u] for u in _bits(self.adj[v]) if u in index))
        return Graph(len(vertices), tuple(rows))

    def to_matrix(self, dtype=np.uint8) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=dtype)
        for u, v in self.edges():
            m[u, v] = m[v, u] = 1
        return m

    def to_hypergraph(self) -> Hypergraph:
        return Hypergraph(self.n, 2, self.edges())


@dataclass(frozen=True)
class PeelOrdering:
    """Vertex order ``v_1..v_n`` with ``degrees[i]`` the degree of ``order[i]``
    inside the sub-hypergraph induced by ``order[:i + 1]``."""

    order: tuple[int, ...]
    degrees: tuple[int, ...]


@dataclass(frozen=True)
class GirthAtLeast:
    """Sentinel girth value: no Berge cycle of length below ``bound`` exists."""

    bound: int

    def __str__(self) -> str:
        return f"≥ {self.bound}"


def shadow(H: Hypergraph) -> Graph:
    """Graph of all pairs covered by at least one hyperedge."""
    rows = [0] * H.n
    for e in H.edges:
        mask = sum(1 << v for v in e)
        for v in e:
            rows[v] |= mask ^ (1 << v)
    return Graph(H.n, tuple(rows))


def _check_pair(H: Hypergraph, x: int, y: int):
    if x == y:
        raise ValueError("codegree needs two distinct vertices")
    if not (0 <= x < H.n and 0 <= y < H.n):
        raise ValueError(f"vertex outside 0..{H.n - 1}")


def codegree(H: Hypergraph, x: int, y: int) -> int:
    _check_pair(H, x, y)
    return sum(1 for e in H.edges if x in e and y in e)


def codegrees(H: Hypergraph) -> dict[tuple[int, int], int]:
    """Codegree of every shadow pair, keyed by the sorted pair."""
    out: dict[tuple[int, int], int] = {}
    for e in H.edges:
        for pair in combinations(e, 2):
            out[pair] = out.get(pair, 0) + 1
    return out


def extract_d_full(H: Hypergraph, d: int) -> Hypergraph:
    """Delete edges through low-codegree pairs until the rest is ``d``-full.

    Repeatedly takes the lexicographically least pair with
    ``1 <= codegree < d`` and removes every edge containing it. Each round
    deletes at most ``d - 1`` edges and retires one shadow pair, so the
    result keeps at least ``e(H) - (d - 1)|shadow(H)|`` edges.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    edges = list(H.edges)
    while True:
        cod = codegrees(Hypergraph(H.n, H.r, edges))
        bad = [pair for pair, c in cod.items() if c < d]
        if not bad:
            return Hypergraph(H.n, H.r, tuple(edges))
        x, y = min(bad)
        edges = [e for e in edges if not (x in e and y in e)]


def min_degree_peel(H: Hypergraph) -> PeelOrdering:
    """Peel minimum-degree vertices from the end; ties go to the smallest id."""
    alive = set(range(H.n))
    edges = [set(e) for e in H.edges]
    deg = H.degrees()
    reversed_order = []
    reversed_degrees = []
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        reversed_order.append(v)
        reversed_degrees.append(deg[v])
        alive.remove(v)
        remaining = []
        for e in edges:
            if v in e:
                for u in e:
                    if u != v:
                        deg[u] -= 1
            else:
                remaining.append(e)
        edges = remaining
    return PeelOrdering(tuple(reversed(reversed_order)), tuple(reversed(reversed_degrees)))


def is_linear(H: Hypergraph) -> bool:
    """True iff no two hyperedges share two vertices."""
    return all(c <= 1 for c in codegrees(H).values())


def girth(H: Hypergraph, max_k: int = 5):
    """Smallest k with a Berge-C_k in ``H`` (``k <= max_k``), else ``GirthAtLeast``."""
    from .berge import PatternGraph, contains_berge

    if max_k < 2:
        raise ValueError("max_k must be at least 2")
    if not is_linear(H):
        return 2
    for k in range(3, max_k + 1):
        if contains_berge(H, PatternGraph.cycle(k)) is not None:
            return k
    return GirthAtLeast(max_k + 1)

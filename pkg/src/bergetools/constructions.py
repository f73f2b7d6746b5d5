"""Explicit graphs over finite fields and small named fixtures.

Vertex numbering is lexicographic in the element codes of ``bergetools.field``:
a pair ``(x, y)`` of field elements gets index ``code(x) * |Y| + rank(y)``
where ``rank`` is the position of ``y`` in the (sorted) second coordinate set.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .field import field_of_order, norm_map, prime_power
from .hypergraph import Graph, Hypergraph


def _odd_prime_power(q: int) -> tuple[int, int]:
    try:
        p, a = prime_power(q)
    except ValueError:
        raise ValueError(f"q = {q} must be a power of an odd prime") from None
    if p == 2:
        raise ValueError(f"q = {q} must be a power of an odd prime")
    return p, a


@dataclass(frozen=True)
class BipartiteGraph:
    """A graph together with its two designated parts (as index ranges)."""

    graph: Graph
    part_a: range
    part_b: range


def _norm_graph_arcs(s: int, q: int) -> list[tuple[int, int, int, int]]:
    """All ``(x1, x2, y1, y2)`` codes with ``N(x1 + y1) = x2 * y2``, x2, y2 nonzero."""
    nm = norm_map(s, q)
    ext, base = nm.extension, nm.base
    arcs = []
    for x1 in range(ext.order):
        row = ext.add_table[x1]
        for y1 in range(ext.order):
            value = nm.table[row[y1]]
            if value == 0:
                continue
            for x2 in range(1, q):
                arcs.append((x1, x2, y1, base.mul(value, base.inv(x2))))
    return arcs


def _check_norm_params(s: int, q: int):
    if s < 2:
        raise ValueError("norm graphs need s >= 2")
    _odd_prime_power(q)


def norm_graph(s: int, q: int) -> Graph:
    """The projective norm graph on GF(q^(s-1)) x GF(q)^*; loops are dropped.

    Adjacency is built from the ordered solutions of the norm equation and
    checked to be symmetric before the graph is returned.
    """
    _check_norm_params(s, q)
    Q = q ** (s - 1)
    n = Q * (q - 1)
    forward = np.zeros((n, n), dtype=bool)
    for x1, x2, y1, y2 in _norm_graph_arcs(s, q):
        u, v = x1 * (q - 1) + x2 - 1, y1 * (q - 1) + y2 - 1
        forward[u, v] = True
    if not np.array_equal(forward, forward.T):
        raise RuntimeError("norm graph adjacency is not symmetric")
    np.fill_diagonal(forward, False)
    return Graph.from_matrix(forward)


def bipartite_norm_graph(s: int, q: int) -> BipartiteGraph:
    """Bipartite norm graph: part A vertices ``0..m-1``, part B ``m..2m-1``."""
    _check_norm_params(s, q)
    m = q ** (s - 1) * (q - 1)
    rows = [0] * (2 * m)
    for x1, x2, y1, y2 in _norm_graph_arcs(s, q):
        u, v = x1 * (q - 1) + x2 - 1, m + y1 * (q - 1) + y2 - 1
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return BipartiteGraph(Graph(2 * m, tuple(rows)), range(m), range(m, 2 * m))


def erdos_renyi_polarity(q: int) -> Graph:
    """Graph on GF(q)^2 with ``(a1, a2) ~ (b1, b2)`` iff ``a1 + b1 = a2 * b2``; loops dropped."""
    _odd_prime_power(q)
    F = field_of_order(q)
    rows = [0] * (q * q)
    for a1 in range(q):
        for a2 in range(q):
            u = a1 * q + a2
            for b2 in range(q):
                b1 = F.sub(F.mul(a2, b2), a1)
                v = b1 * q + b2
                if v != u:
                    rows[u] |= 1 << v
    return Graph(q * q, tuple(rows))


@dataclass(frozen=True)
class CompositeGraph:
    """Two random polarity graphs on parts A and B joined by a bipartite norm graph.

    ``sub_a``/``sub_b`` are the prefixes of A and B carrying the norm graph.
    """

    graph: Graph
    part_a: range
    part_b: range
    sub_a: range
    sub_b: range
    seed: int
    s: int
    q: int

    def cross_graph(self) -> Graph:
        """Spanning subgraph of the A-B edges."""
        rows = list(self.graph.adj)
        mask_a = sum(1 << v for v in self.part_a)
        mask_b = sum(1 << v for v in self.part_b)
        for v in self.part_a:
            rows[v] &= mask_b
        for v in self.part_b:
            rows[v] &= mask_a
        return Graph(self.graph.n, tuple(rows))


def _even_power_root(q: int, s: int) -> int:
    p, a = _odd_prime_power(q)
    if a % 2:
        raise ValueError(f"q = {q} must be an even power of an odd prime")
    return p ** (a * s // 2)


def composite_parameters(s: int, q: int) -> dict:
    """Sizes used by ``composite_graph``: ``Q = q^(s/2)`` and the part sizes."""
    if s < 3:
        raise ValueError("the composite needs s >= 3")
    Q = _even_power_root(q, s)
    return {"Q": Q, "part": q ** s, "sub": q ** (s - 1) * (q - 1)}


def random_relabel_streams(seed: int, count: int = 2) -> list[np.random.Generator]:
    """Independent generators split from one seed."""
    return [np.random.default_rng(child) for child in np.random.SeedSequence(seed).spawn(count)]


@functools.lru_cache(maxsize=4)
def _composite_pieces(s: int, q: int):
    Q = composite_parameters(s, q)["Q"]
    return tuple(erdos_renyi_polarity(Q).edges()), bipartite_norm_graph(s, q)


def composite_graph(s: int, q: int, seed: int = 0) -> CompositeGraph:
    """Norm graph between prefixes of A and B plus random polarity graphs inside each part.

    ``q`` must be an even power of an odd prime so that ``Q = q^(s/2)`` is a
    prime power and the polarity graph on GF(Q)^2 has exactly ``q^s``
    vertices. Each part's copy is placed by an independent uniformly random
    bijection drawn from streams split off ``seed``.
    """
    params = composite_parameters(s, q)
    part, sub = params["part"], params["sub"]
    polarity_edges, hb = _composite_pieces(s, q)
    stream_a, stream_b = random_relabel_streams(seed)
    perm_a = stream_a.permutation(part)
    perm_b = stream_b.permutation(part) + part
    rows = [0] * (2 * part)

    def link(u: int, v: int):
        rows[u] |= 1 << v
        rows[v] |= 1 << u

    for u, v in polarity_edges:
        link(int(perm_a[u]), int(perm_a[v]))
        link(int(perm_b[u]), int(perm_b[v]))
    for u, v in hb.graph.edges():
        link(u, part + (v - sub))
    return CompositeGraph(
        Graph(2 * part, tuple(rows)),
        range(part), range(part, 2 * part),
        range(sub), range(part, part + sub),
        seed, s, q,
    )


FANO_LINES = ((0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5))


def fano() -> Hypergraph:
    """The Fano plane as a linear 3-graph on 7 points."""
    return Hypergraph(7, 3, FANO_LINES)

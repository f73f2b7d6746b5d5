"""Girth-5 hypergraphs: the 2-path auxiliary graph and the peel check.

A hypergraph has girth at least 5 when it has no Berge cycle of length 2, 3
or 4. Building one vertex at a time along a minimum-degree peel, the new
vertex's neighbours must be pairwise non-adjacent in the auxiliary graph of
Berge paths of length two; ``verify_peel_independence`` checks exactly that.
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional

import numpy as np

from .errors import PreconditionError
from .hypergraph import Graph, Hypergraph, _bits, girth, min_degree_peel, shadow


def kw_auxiliary_graph(H: Hypergraph) -> Graph:
    """Graph joining x and y when some z outside {x, y} lies on two distinct
    hyperedges, one through x and z and one through z and y."""
    rows = [0] * H.n
    through: list[list[tuple[int, ...]]] = [[] for _ in range(H.n)]
    for e in H.edges:
        for v in e:
            through[v].append(e)
    for z in range(H.n):
        for e1, e2 in combinations(through[z], 2):
            left = sum(1 << x for x in e1 if x != z)
            right = sum(1 << y for y in e2 if y != z)
            for x in _bits(left):
                rows[x] |= right & ~(1 << x)
            for y in _bits(right):
                rows[y] |= left & ~(1 << y)
    return Graph(H.n, tuple(rows))


def has_girth_at_least_5(H: Hypergraph) -> bool:
    return not isinstance(girth(H, 4), int)


def verify_peel_independence(H: Hypergraph) -> bool:
    """Check every peel step: the shadow neighbours of ``v_{i+1}`` among
    ``v_1..v_i`` are independent in the auxiliary graph of ``G_i``."""
    if not has_girth_at_least_5(H):
        raise PreconditionError("hypergraph has a Berge cycle of length at most 4")
    order = min_degree_peel(H).order
    for i in range(1, H.n):
        prefix = order[:i]
        v = order[i]
        aux = kw_auxiliary_graph(H.induced(prefix))
        step = shadow(H.induced(prefix + (v,)))
        nbrs = step.adj[v]
        for x in _bits(nbrs):
            if aux.adj[x] & nbrs:
                return False
    return True


def _within_distance(adj: list[int], x: int, radius: int) -> int:
    seen = frontier = 1 << x
    for _ in range(radius):
        reach = 0
        for u in _bits(frontier):
            reach |= adj[u]
        frontier = reach & ~seen
        seen |= frontier
    return seen & ~(1 << x)


def greedy_girth5(n: int, r: int = 3, seed: int = 0, rng: Optional[np.random.Generator] = None) -> Hypergraph:
    """Random maximal girth-5 r-graph: scan r-sets in random order, keep what fits.

    An r-set closes a Berge cycle of length at most 4 exactly when two of its
    vertices are at distance at most 3 in the current shadow.
    """
    if rng is None:
        rng = np.random.default_rng(seed)
    candidates = list(combinations(range(n), r))
    adj = [0] * n
    edges = []
    for idx in rng.permutation(len(candidates)):
        e = candidates[int(idx)]
        mask = sum(1 << v for v in e)
        if any(_within_distance(adj, x, 3) & mask for x in e):
            continue
        edges.append(e)
        for v in e:
            adj[v] |= mask ^ (1 << v)
    return Hypergraph(n, r, tuple(edges))

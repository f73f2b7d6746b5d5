"""Exact counts on graphs: cliques, K_{s,t} copies, independent sets.

Also houses the Kleitman-Winston bound checker and the expected number of
K4 copies split 2+2 across the composite construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np

from .errors import ResourceLimitError
from .hypergraph import Graph, _bits


def count_cliques(G: Graph, m: int) -> int:
    """Number of m-cliques, by extension through higher-numbered neighbours."""
    if m < 1:
        raise ValueError("clique size must be at least 1")
    if m == 1:
        return G.n
    higher = [row >> (v + 1) << (v + 1) for v, row in enumerate(G.adj)]

    def extend(cands: int, depth: int) -> int:
        if depth == 1:
            return cands.bit_count()
        return sum(extend(cands & higher[v], depth - 1) for v in _bits(cands))

    return sum(extend(higher[v], m - 1) for v in range(G.n))


def codegree_matrix(G: Graph) -> np.ndarray:
    A = G.to_matrix(np.float64)
    return np.rint(A @ A.T).astype(np.int64)


def find_kst(G: Graph, s: int, t: int) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Return ``(S, T)`` spanning a K_{s,t} in ``G`` or ``None``.

    Walks s-subsets in increasing order keeping the common neighbourhood as a
    bitset and dropping prefixes whose common neighbourhood has fewer than
    ``t`` vertices. The last two members are found at once from a common
    neighbour count matrix.
    """
    if not 1 <= s <= t:
        raise ValueError("need 1 <= s <= t")
    adj = G.adj
    active = [v for v in range(G.n) if adj[v].bit_count() >= t]

    def take(mask: int, k: int) -> tuple[int, ...]:
        out = []
        for v in _bits(mask):
            out.append(v)
            if len(out) == k:
                break
        return tuple(out)

    if s == 1:
        return ((active[0],), take(adj[active[0]], t)) if active else None

    A = G.to_matrix(np.float32)

    def finish(prefix: list[int], common: int, pool: list[int]):
        cands = [v for v in pool if (adj[v] & common).bit_count() >= t]
        if len(cands) < 2:
            return None
        cols = list(_bits(common))
        sub = A[np.ix_(cands, cols)]
        counts = np.triu(sub @ sub.T, k=1)
        hits = np.argwhere(counts >= t)
        if hits.size == 0:
            return None
        i, j = hits[0]
        b, c = cands[i], cands[j]
        return tuple(prefix) + (b, c), take(common & adj[b] & adj[c], t)

    full = (1 << G.n) - 1

    def descend(prefix: list[int], common: int, start: int):
        pool = [v for v in active if v >= start]
        if len(prefix) == s - 2:
            return finish(prefix, common, pool)
        for i, v in enumerate(pool):
            narrowed = common & adj[v]
            if narrowed.bit_count() < t:
                continue
            found = descend(prefix + [v], narrowed, v + 1)
            if found:
                return found
        return None

    return descend([], full, 0)


def is_kst_free(G: Graph, s: int, t: int) -> bool:
    return find_kst(G, s, t) is None


def count_k22(G: Graph) -> int:
    """Number of K_{2,2} subgraphs (4-cycles).

    Every 4-cycle has two diagonals, each a pair with the other two vertices
    as common neighbours, so summing ``C(codeg, 2)`` over pairs counts each
    copy twice.
    """
    cod = codegree_matrix(G)
    upper = np.triu(cod, k=1)
    total = int((upper * (upper - 1) // 2).sum())
    return total // 2


def _independence_counts(G: Graph, max_size: int, budget: Optional[int]) -> tuple[int, ...]:
    adj = G.adj
    nodes = 0

    @lru_cache(maxsize=None)
    def count(cands: int) -> tuple[int, ...]:
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise ResourceLimitError(f"node budget of {budget} exhausted", nodes)
        size = cands.bit_count()
        best, best_deg = -1, 0
        for v in _bits(cands):
            d = (adj[v] & cands).bit_count()
            if d > best_deg:
                best, best_deg = v, d
        if best < 0:
            return tuple(math.comb(size, k) for k in range(max_size + 1))
        without = count(cands & ~(1 << best))
        with_ = count(cands & ~(1 << best) & ~adj[best])
        return tuple(without[k] + (with_[k - 1] if k else 0) for k in range(max_size + 1))

    return count((1 << G.n) - 1)


def independence_counts(G: Graph, max_size: Optional[int] = None, budget: Optional[int] = None) -> list[int]:
    """``[ind(G, 0), ..., ind(G, max_size)]`` by branching on a maximum-degree vertex."""
    if max_size is None:
        max_size = G.n
    return list(_independence_counts(G, max_size, budget))


def count_independent_sets(G: Graph, d: int, budget: Optional[int] = None) -> int:
    if d < 0:
        raise ValueError("size must be non-negative")
    if d > G.n:
        return 0
    return _independence_counts(G, d, budget)[d]


def generalized_binomial(x, k: int) -> Fraction:
    """``x (x-1) ... (x-k+1) / k!`` for real ``x``; zero once a factor is negative."""
    if k < 0:
        return Fraction(0)
    x = Fraction(x)
    out = Fraction(1)
    for j in range(k):
        factor = x - j
        if factor < 0:
            return Fraction(0)
        out = out * factor / (j + 1)
    return out


@dataclass(frozen=True)
class KwParameters:
    beta: float
    q: int
    R: float

    def __post_init__(self):
        if not 0 < self.beta < 1:
            raise ValueError("beta must lie in (0, 1)")
        if self.q < 0 or int(self.q) != self.q:
            raise ValueError("q must be a non-negative integer")


@dataclass
class KwReport:
    """Outcome of a Kleitman-Winston check.

    ``density`` is ``"certified"`` (exhaustive), ``"not refuted"`` (sampled)
    or ``"refuted"``. ``rows`` holds ``(m, ind(G, m), bound)`` for ``m >= q``
    and is only filled when both hypotheses are certified.
    """

    size_condition: bool
    density: str
    rows: list = field(default_factory=list)
    failure: Optional[str] = None

    @property
    def hypotheses_certified(self) -> bool:
        return self.size_condition and self.density == "certified"

    @property
    def holds(self) -> Optional[bool]:
        if not self.hypotheses_certified:
            return None
        return all(ind <= bound for _, ind, bound in self.rows)


def _induced_edge_table(G: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Edge count and size of the vertex set for every bitmask ``U``."""
    edges = np.zeros(1, dtype=np.int32)
    for v in range(G.n):
        lower = np.arange(1 << v, dtype=np.int64)
        gain = np.bitwise_count(lower & (G.adj[v] & ((1 << v) - 1))).astype(np.int32)
        edges = np.concatenate([edges, edges + gain])
    sizes = np.bitwise_count(np.arange(1 << G.n, dtype=np.int64)).astype(np.int32)
    return edges, sizes


EXHAUSTIVE_DENSITY_LIMIT = 20


def min_density_above(G: Graph, R: float) -> Fraction:
    """Minimum of ``e(U) / C(|U|, 2)`` over ``|U| >= max(R, 2)`` (exhaustive)."""
    if G.n > EXHAUSTIVE_DENSITY_LIMIT:
        raise ResourceLimitError(f"exhaustive density check limited to n <= {EXHAUSTIVE_DENSITY_LIMIT}")
    edges, sizes = _induced_edge_table(G)
    low = max(2, math.ceil(R))
    best = Fraction(1)
    for u in range(low, G.n + 1):
        best = min(best, Fraction(int(edges[sizes == u].min()), math.comb(u, 2)))
    return best


def kw_parameters_for(G: Graph, R: Optional[float] = None) -> Optional[KwParameters]:
    """Valid parameters for ``G``: ``R`` (default ``alpha(G) + 1``), the largest
    admissible ``beta`` below 1, and the least ``q`` meeting ``R >= e^{-beta q} n``.

    Returns ``None`` when no ``beta > 0`` works for this ``R``.
    """
    if R is None:
        counts = independence_counts(G)
        R = float(max(k for k, c in enumerate(counts) if c) + 1)
    dens = min_density_above(G, R)
    if dens == 0:
        return None
    # stay strictly below the exact minimum so float comparisons cannot flip
    beta = min(float(dens), 1.0) * (1 - 1e-9)
    q = max(0, math.ceil(math.log(G.n / R) / beta)) if R < G.n else 0
    while R < math.exp(-beta * q) * G.n:
        q += 1
    return KwParameters(beta, q, R)


def kw_bound_check(G: Graph, params: KwParameters, samples: int = 20000, seed: int = 0) -> KwReport:
    """Check both hypotheses of the Kleitman-Winston container bound and, if certified,
    compare ``ind(G, m)`` with ``C(n, q) C(R, m - q)`` for every ``m >= q``.

    The density hypothesis is checked over all vertex subsets when
    ``n <= 20``; larger graphs get a seeded random search that can only
    refute it.
    """
    n, beta, q, R = G.n, params.beta, params.q, params.R
    size_ok = R >= math.exp(-beta * q) * n
    if n <= EXHAUSTIVE_DENSITY_LIMIT:
        edges, sizes = _induced_edge_table(G)
        need = beta * (sizes.astype(np.float64) * (sizes - 1) / 2)
        bad = (sizes >= R) & (edges < need)
        density = "refuted" if bad.any() else "certified"
    else:
        rng = np.random.default_rng(seed)
        density = "not refuted"
        low = max(0, math.ceil(R))
        for _ in range(samples if low <= n else 0):
            size = int(rng.integers(low, n + 1))
            U = rng.choice(n, size=size, replace=False)
            mask = sum(1 << int(u) for u in U)
            e = sum((G.adj[int(u)] & mask).bit_count() for u in U) // 2
            if e < beta * math.comb(size, 2):
                density = "refuted"
                break
    report = KwReport(size_ok, density)
    if not size_ok:
        report.failure = "size condition R >= exp(-beta q) n fails"
    elif density != "certified":
        report.failure = f"density condition {density}"
    if report.failure:
        return report
    counts = independence_counts(G)
    head = math.comb(n, q)
    for m in range(q, n + 1):
        ind = counts[m] if m < len(counts) else 0
        report.rows.append((m, ind, head * generalized_binomial(Fraction(R), m - q)))
    return report


def split_k4_count(composite) -> int:
    """K4 copies with two vertices in each part of a composite graph."""
    adj = composite.graph.adj
    mask_a = sum(1 << v for v in composite.part_a)
    mask_b = sum(1 << v for v in composite.part_b)
    total = 0
    for a1 in composite.sub_a:
        for a2 in _bits(adj[a1] & mask_a & ~((1 << (a1 + 1)) - 1)):
            common = adj[a1] & adj[a2] & mask_b
            if common.bit_count() < 2:
                continue
            inside = sum((adj[b] & common).bit_count() for b in _bits(common))
            total += inside // 2
    return total


def composite_k4_expectation_exact(s: int, q: int) -> Fraction:
    """Expected 2+2-split K4 count over the two random placements.

    Each K_{2,2} of the norm graph becomes a K4 exactly when its A-pair and
    its B-pair are both edges of the randomly placed polarity graphs; each
    happens with probability ``e(R_Q) / C(Q^2, 2)``, independently.
    """
    from .constructions import bipartite_norm_graph, composite_parameters, erdos_renyi_polarity

    Q = composite_parameters(s, q)["Q"]
    k22 = count_k22(bipartite_norm_graph(s, q).graph)
    p_pair = Fraction(2 * erdos_renyi_polarity(Q).num_edges, Q * Q * (Q * Q - 1))
    return k22 * p_pair * p_pair


def composite_k4_expectation(s: int, q: int) -> float:
    return float(composite_k4_expectation_exact(s, q))

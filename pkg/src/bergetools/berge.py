"""Berge-F containment, expansions F+, and the bounded-codegree pair.

A hypergraph ``H`` contains a Berge-F when the edges of ``F`` can be sent
injectively to hyperedges of ``H`` so that every graph edge lies inside its
image, after some injective placement of the vertices of ``F``. The search
below enumerates vertex placements (pruned by shadow adjacency, degrees and
codegrees) and settles the edge assignment for each placement with a
bipartite matching.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterator, Optional, Sequence

from .errors import PreconditionError, ResourceLimitError
from .hypergraph import Graph, Hypergraph, _bits, codegrees, shadow

#: Largest expansion (in vertices) that ``find_expansion`` will search for.
MAX_EXPANSION_VERTICES = 12


@dataclass(frozen=True)
class PatternGraph:
    """A forbidden pattern: a loopless graph on ``range(n)``.

    Parallel edges are allowed so that the 2-cycle ``C2`` (two edges on the
    same pair) can be expressed; every other named pattern is simple.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    name: str = ""

    def __post_init__(self):
        normalised = []
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"pattern has a loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"pattern edge ({u}, {v}) outside 0..{self.n - 1}")
            normalised.append((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", tuple(normalised))

    def __str__(self) -> str:
        return self.name or f"F(n={self.n}, e={len(self.edges)})"

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_vertices(self) -> int:
        return self.n

    def degree(self, u: int) -> int:
        """Number of edges at ``u``, counting parallel edges separately."""
        return sum(1 for e in self.edges if u in e)

    def neighbors(self, u: int) -> list[int]:
        return sorted({v for e in self.edges if u in e for v in e if v != u})

    def simple_edges(self) -> list[tuple[int, int]]:
        return sorted(set(self.edges))

    def multiplicity(self, u: int, v: int) -> int:
        pair = (min(u, v), max(u, v))
        return sum(1 for e in self.edges if e == pair)

    def as_graph(self) -> Graph:
        return Graph.from_edges(self.n, self.simple_edges())

    # named families
    @classmethod
    def cycle(cls, k: int) -> "PatternGraph":
        if k < 2:
            raise ValueError("cycles need length at least 2")
        if k == 2:
            return cls(2, ((0, 1), (0, 1)), "C2")
        return cls(k, tuple((i, (i + 1) % k) for i in range(k)), f"C{k}")

    @classmethod
    def path(cls, length: int) -> "PatternGraph":
        """Path with ``length`` edges."""
        if length < 1:
            raise ValueError("paths need at least one edge")
        return cls(length + 1, tuple((i, i + 1) for i in range(length)), f"P{length}")

    @classmethod
    def complete(cls, k: int) -> "PatternGraph":
        if k < 2:
            raise ValueError("K_k needs k >= 2")
        return cls(k, tuple((i, j) for i in range(k) for j in range(i + 1, k)), f"K{k}")

    @classmethod
    def complete_bipartite(cls, s: int, t: int) -> "PatternGraph":
        if s < 1 or t < 1:
            raise ValueError("K_{s,t} needs s, t >= 1")
        return cls(s + t, tuple((i, s + j) for i in range(s) for j in range(t)), f"K{s},{t}")

    @classmethod
    def star(cls, s: int) -> "PatternGraph":
        return cls.complete_bipartite(1, s)

    @classmethod
    def from_graph(cls, G: Graph, name: str = "") -> "PatternGraph":
        return cls(G.n, tuple(G.edges()), name)

    @classmethod
    def parse(cls, spec: str) -> "PatternGraph":
        """Parse ``C4``, ``P3``, ``K4``, ``K2,3`` or a path to a graph file."""
        m = re.fullmatch(r"\s*([CPK])(\d+)(?:,(\d+))?\s*", spec)
        if m:
            kind, a, b = m.group(1), int(m.group(2)), m.group(3)
            if b is not None:
                if kind != "K":
                    raise ValueError(f"bad pattern {spec!r}")
                return cls.complete_bipartite(a, int(b))
            return {"C": cls.cycle, "P": cls.path, "K": cls.complete}[kind](a)
        path = Path(spec)
        if path.exists():
            from .formats import read_graph

            return cls.from_graph(read_graph(path), path.stem)
        raise ValueError(f"unknown pattern {spec!r}; use C<k>, P<k>, K<k>, K<s>,<t> or a graph file")


def placement_order(F: PatternGraph) -> list[int]:
    """Vertices of ``F`` with high degree first, keeping the placed set connected."""
    remaining = set(range(F.n))
    nbrs = [set(F.neighbors(u)) for u in range(F.n)]
    order: list[int] = []
    while remaining:
        placed = set(order)
        u = max(remaining, key=lambda w: (len(nbrs[w] & placed), F.degree(w), -w))
        order.append(u)
        remaining.remove(u)
    return order


class _Budget:
    __slots__ = ("limit", "nodes")

    def __init__(self, limit: Optional[int]):
        self.limit = limit
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise ResourceLimitError(f"node budget of {self.limit} exhausted", self.nodes)


def iter_embeddings(
    F: PatternGraph,
    n: int,
    adj: Sequence[int],
    candidates: Optional[Sequence[int]] = None,
    pair_ok: Optional[Callable[[int, int, int], bool]] = None,
    budget: Optional[int] = None,
) -> Iterator[tuple[int, ...]]:
    """Yield injective maps ``V(F) -> range(n)`` sending edges to ``adj`` pairs.

    ``candidates[u]`` restricts the image of ``u`` (bitset). ``pair_ok(x, y,
    mult)`` may reject an image pair of an edge with multiplicity ``mult``.
    Maps are yielded as tuples indexed by the vertices of ``F``.
    """
    order = placement_order(F)
    position = {u: i for i, u in enumerate(order)}
    back = []
    for u in order:
        earlier = [w for w in F.neighbors(u) if position[w] < position[u]]
        back.append([(w, F.multiplicity(u, w)) for w in earlier])
    full = (1 << n) - 1
    phi = [-1] * F.n
    counter = _Budget(budget)

    def extend(i: int, used: int):
        if i == len(order):
            yield tuple(phi)
            return
        u = order[i]
        cand = (candidates[u] if candidates is not None else full) & ~used
        for w, _ in back[i]:
            cand &= adj[phi[w]]
        for x in _bits(cand):
            counter.tick()
            if pair_ok is not None and not all(pair_ok(x, phi[w], mult) for w, mult in back[i]):
                continue
            phi[u] = x
            yield from extend(i + 1, used | (1 << x))
        phi[u] = -1

    yield from extend(0, 0)


def bipartite_matching(options: Sequence[Sequence[int]]) -> Optional[list[int]]:
    """Saturate the left side by augmenting paths, or return ``None``.

    ``options[i]`` lists the right vertices left vertex ``i`` may take.
    """
    owner: dict[int, int] = {}

    def augment(i: int, seen: set) -> bool:
        for e in options[i]:
            if e in seen:
                continue
            seen.add(e)
            if e not in owner or augment(owner[e], seen):
                owner[e] = i
                return True
        return False

    for i in range(len(options)):
        if not augment(i, set()):
            return None
    assignment = [0] * len(options)
    for e, i in owner.items():
        assignment[i] = e
    return assignment


@dataclass(frozen=True)
class BergeWitness:
    """Placement of ``V(F)`` plus the hyperedge chosen for each edge of ``F``."""

    core_map: tuple[int, ...]
    edge_map: tuple[tuple[int, ...], ...]

    def is_valid(self, H: Hypergraph, F: PatternGraph) -> bool:
        if len(self.core_map) != F.n or len(set(self.core_map)) != F.n:
            return False
        if len(self.edge_map) != F.num_edges or len(set(self.edge_map)) != F.num_edges:
            return False
        hyperedges = set(H.edges)
        for (u, v), e in zip(F.edges, self.edge_map):
            if e not in hyperedges:
                return False
            if self.core_map[u] not in e or self.core_map[v] not in e:
                return False
        return True

    def is_expansion(self, H: Hypergraph, F: PatternGraph) -> bool:
        """Valid, and the chosen edges meet only inside the core as in F+."""
        if not self.is_valid(H, F):
            return False
        core = set(self.core_map)
        seen: set[int] = set()
        for (u, v), e in zip(F.edges, self.edge_map):
            extra = set(e) - {self.core_map[u], self.core_map[v]}
            if extra & core or extra & seen:
                return False
            seen |= extra
        return True

    def format(self, F: PatternGraph) -> str:
        lines = ["core: " + " ".join(f"{u}->{x}" for u, x in enumerate(self.core_map))]
        for (u, v), e in zip(F.edges, self.edge_map):
            lines.append(f"edge {u}-{v}: " + " ".join(map(str, e)))
        return "\n".join(lines)


def _require_edges(F: PatternGraph):
    if F.num_edges == 0:
        raise ValueError("containment queries need a pattern with at least one edge")


def contains_berge(H: Hypergraph, F: PatternGraph, budget: Optional[int] = None) -> Optional[BergeWitness]:
    """Return a Berge-F witness in ``H``, or ``None`` if there is none."""
    _require_edges(F)
    if H.num_edges < F.num_edges or H.n < F.n:
        return None
    cod = codegrees(H)
    pair_edges: dict[tuple[int, int], list[int]] = {}
    for idx, e in enumerate(H.edges):
        for i in range(len(e)):
            for j in range(i + 1, len(e)):
                pair_edges.setdefault((e[i], e[j]), []).append(idx)
    sh = shadow(H)
    hdeg = H.degrees()
    candidates = []
    for u in range(F.n):
        need_deg, need_nbrs = F.degree(u), len(F.neighbors(u))
        candidates.append(sum(
            1 << x for x in range(H.n) if hdeg[x] >= need_deg and sh.degree(x) >= need_nbrs
        ))

    def pair_ok(x: int, y: int, mult: int) -> bool:
        return cod.get((min(x, y), max(x, y)), 0) >= mult

    for phi in iter_embeddings(F, H.n, sh.adj, candidates, pair_ok, budget):
        options = []
        for u, v in F.edges:
            x, y = phi[u], phi[v]
            options.append(pair_edges[(min(x, y), max(x, y))])
        assignment = bipartite_matching(options)
        if assignment is not None:
            return BergeWitness(phi, tuple(H.edges[i] for i in assignment))
    return None


@dataclass(frozen=True)
class Expansion:
    """The r-uniform expansion of a pattern and the vertices forming its core."""

    hypergraph: Hypergraph
    core: tuple[int, ...]


def expand(F: PatternGraph, r: int) -> Expansion:
    """Pad every edge of ``F`` with ``r - 2`` new vertices, numbered in edge order."""
    if r < 3:
        raise ValueError("expansions need r >= 3")
    pad = r - 2
    edges = []
    for i, (u, v) in enumerate(F.edges):
        fresh = range(F.n + i * pad, F.n + (i + 1) * pad)
        edges.append((u, v, *fresh))
    H = Hypergraph(F.n + F.num_edges * pad, r, tuple(edges))
    return Expansion(H, tuple(range(F.n)))


def find_expansion(
    H: Hypergraph, F: PatternGraph, r: Optional[int] = None, budget: Optional[int] = None
) -> Optional[BergeWitness]:
    """Return a copy of F+ in ``H`` as a witness, or ``None``.

    Intended for small patterns: expansions with more than
    ``MAX_EXPANSION_VERTICES`` vertices raise ``ResourceLimitError``.
    """
    _require_edges(F)
    if r is None:
        r = H.r
    if r != H.r:
        raise ValueError(f"uniformity mismatch: pattern expanded to r={r}, hypergraph has r={H.r}")
    if r < 3:
        raise ValueError("expansions need r >= 3")
    size = F.n + F.num_edges * (r - 2)
    if size > MAX_EXPANSION_VERTICES:
        raise ResourceLimitError(
            f"expansion has {size} vertices; limit is {MAX_EXPANSION_VERTICES}")
    if H.num_edges < F.num_edges or H.n < size:
        return None
    masks = H.edge_masks()
    pair_edges: dict[tuple[int, int], list[int]] = {}
    for idx, e in enumerate(H.edges):
        for i in range(r):
            for j in range(i + 1, r):
                pair_edges.setdefault((e[i], e[j]), []).append(idx)
    sh = shadow(H)
    hdeg = H.degrees()
    candidates = [sum(1 << x for x in range(H.n) if hdeg[x] >= F.degree(u)) for u in range(F.n)]
    cod = codegrees(H)

    def pair_ok(x: int, y: int, mult: int) -> bool:
        return cod.get((min(x, y), max(x, y)), 0) >= mult

    for phi in iter_embeddings(F, H.n, sh.adj, candidates, pair_ok, budget):
        core = sum(1 << x for x in phi)
        options = []
        for u, v in F.edges:
            x, y = min(phi[u], phi[v]), max(phi[u], phi[v])
            pair = (1 << x) | (1 << y)
            options.append([i for i in pair_edges[(x, y)] if masks[i] & core == pair])
        if any(not opt for opt in options):
            continue
        order = sorted(range(F.num_edges), key=lambda i: len(options[i]))
        chosen = [0] * F.num_edges

        def assign(k: int, used: int) -> bool:
            if k == len(order):
                return True
            i = order[k]
            u, v = F.edges[i]
            pair = (1 << phi[u]) | (1 << phi[v])
            for idx in options[i]:
                extra = masks[idx] & ~pair
                if extra & used:
                    continue
                chosen[i] = idx
                if assign(k + 1, used | extra):
                    return True
            return False

        if assign(0, 0):
            return BergeWitness(phi, tuple(H.edges[i] for i in chosen))
    return None


def contains_expansion(H: Hypergraph, F: PatternGraph, r: Optional[int] = None,
                       budget: Optional[int] = None) -> bool:
    return find_expansion(H, F, r, budget) is not None


def bounded_codegree_pair(H: Hypergraph, F: PatternGraph) -> Optional[tuple[int, int]]:
    """Pair on a copy of ``F`` in the shadow whose codegree is below ``e(F)``.

    Returns ``None`` when the shadow has no copy of ``F``. For a Berge-F-free
    ``H`` such a pair always exists on every copy; if the first copy found
    has none, ``H`` contains a Berge-F and ``PreconditionError`` is raised.
    """
    _require_edges(F)
    sh = shadow(H)
    cod = codegrees(H)
    simple = PatternGraph(F.n, tuple(F.simple_edges()))
    for phi in iter_embeddings(simple, H.n, sh.adj):
        for u, v in simple.edges:
            pair = (min(phi[u], phi[v]), max(phi[u], phi[v]))
            if cod.get(pair, 0) < F.num_edges:
                return pair
        raise PreconditionError("hypergraph contains a Berge copy of the pattern")
    return None

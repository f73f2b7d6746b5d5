"""Exact Turán-type searches and labelled censuses at small n.

Every search works over the ground set of all r-subsets of ``range(n)`` in
lexicographic order. Forbidden configurations are first listed as bitmasks
over the ground set ("copies": edge sets forming F, a Berge-F, or F+). A
family is then free iff it contains no copy, and since families are grown
one element at a time, adding ``j`` is legal iff no copy through ``j`` is
completed. The depth-first search only ever extends a family with elements
larger than its current maximum, so each free family is visited exactly once
and in lexicographic order; the first optimum met is the lexicographically
least one.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Iterable, Iterator, Optional, Sequence, Union

from .berge import PatternGraph, contains_berge, find_expansion, iter_embeddings
from .counting import count_cliques
from .errors import ResourceLimitError
from .hypergraph import Graph, Hypergraph, _bits
from .report import CensusTable, SearchReport

GRAPH_LIMIT = 10
GENERALIZED_LIMIT = 9
HYPERGRAPH_GROUND_LIMIT = 56
CENSUS_LIMITS = {2: 8, 3: 6}

Patterns = Union[PatternGraph, Sequence[PatternGraph]]


def berge_cycle_family(k: int) -> list[PatternGraph]:
    """Berge-C_2 ... Berge-C_k; ``k = 4`` gives the girth-5 family."""
    return [PatternGraph.cycle(j) for j in range(2, k + 1)]


def _as_list(patterns: Patterns) -> list[PatternGraph]:
    if isinstance(patterns, PatternGraph):
        return [patterns]
    return list(patterns)


def _family_name(patterns: list[PatternGraph]) -> str:
    names = [str(p) for p in patterns]
    if names == ["C2", "C3", "C4"]:
        return "B4"
    return "+".join(names)


class Ground:
    """All r-subsets of ``range(n)`` with their lexicographic indices."""

    def __init__(self, n: int, r: int):
        self.n, self.r = n, r
        self.sets = list(combinations(range(n), r))
        self.index = {e: i for i, e in enumerate(self.sets)}
        self.through_pair: dict[tuple[int, int], list[int]] = {}
        for i, e in enumerate(self.sets):
            for pair in combinations(e, 2):
                self.through_pair.setdefault(pair, []).append(i)

    def __len__(self) -> int:
        return len(self.sets)

    def members(self, mask: int) -> list[tuple[int, ...]]:
        return [self.sets[i] for i in _bits(mask)]

    def hypergraph(self, mask: int) -> Hypergraph:
        return Hypergraph(self.n, self.r, tuple(self.members(mask)))

    def graph(self, mask: int) -> Graph:
        return Graph.from_edges(self.n, self.members(mask))


def _complete_adj(n: int) -> list[int]:
    full = (1 << n) - 1
    return [full ^ (1 << v) for v in range(n)]


def graph_copies(ground: Ground, F: PatternGraph) -> set[int]:
    """Edge sets of ordinary copies of ``F`` inside K_n."""
    if ground.r != 2:
        raise ValueError("graph copies live on the 2-subsets")
    if len(set(F.edges)) != len(F.edges):
        return set()
    copies = set()
    for phi in iter_embeddings(F, ground.n, _complete_adj(ground.n)):
        copies.add(sum(1 << ground.index[tuple(sorted((phi[u], phi[v])))] for u, v in F.edges))
    return copies


def berge_copies(ground: Ground, F: PatternGraph) -> set[int]:
    """Sets of ``e(F)`` r-sets that form a Berge-F."""
    copies = set()
    for phi in iter_embeddings(F, ground.n, _complete_adj(ground.n)):
        options = [ground.through_pair[tuple(sorted((phi[u], phi[v])))] for u, v in F.edges]
        for choice in product(*options):
            if len(set(choice)) == len(choice):
                copies.add(sum(1 << i for i in choice))
    return copies


def expansion_copies(ground: Ground, F: PatternGraph) -> set[int]:
    """Sets of r-sets forming a copy of F+ (padding sets pairwise disjoint, off the core)."""
    r = ground.r
    if r < 3:
        raise ValueError("expansions need r >= 3")
    copies = set()
    for phi in iter_embeddings(F, ground.n, _complete_adj(ground.n)):
        core = set(phi)
        free = [v for v in range(ground.n) if v not in core]

        def pad(k: int, used: frozenset, chosen: list[int]):
            if k == F.num_edges:
                copies.add(sum(1 << i for i in chosen))
                return
            u, v = F.edges[k]
            for extra in combinations([w for w in free if w not in used], r - 2):
                edge = tuple(sorted((phi[u], phi[v]) + extra))
                chosen.append(ground.index[edge])
                pad(k + 1, used | set(extra), chosen)
                chosen.pop()

        pad(0, frozenset(), [])
    return copies


def _copies(mode: str, ground: Ground, patterns: list[PatternGraph]) -> list[int]:
    make = {"graph": graph_copies, "generalized": graph_copies,
            "berge": berge_copies, "expansion": expansion_copies}[mode]
    out: set[int] = set()
    for F in patterns:
        out |= make(ground, F)
    return sorted(out)


class _Counter:
    __slots__ = ("limit", "nodes")

    def __init__(self, limit: Optional[int]):
        self.limit = limit
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise ResourceLimitError(f"node budget of {self.limit} exhausted", self.nodes)


def _by_element(size: int, copies: Iterable[int]) -> list[list[int]]:
    by = [[] for _ in range(size)]
    for c in copies:
        for i in _bits(c):
            by[i].append(c)
    return by


def _after_adding(j: int, chosen: int, addable: int, by_elem: list[list[int]]) -> int:
    """Addable elements above ``j`` once ``j`` joins ``chosen`` (which already holds ``j``)."""
    addable &= ~((1 << (j + 1)) - 1)
    for c in by_elem[j]:
        rest = c & ~chosen
        if rest & (rest - 1) == 0:
            addable &= ~rest
    return addable


PACKING_DENSITY = 64


def _packing(chosen: int, addable: int, by_elem: list[list[int]]) -> int:
    """Greedy count of copies inside ``chosen | addable`` with disjoint addable parts.

    Each such copy must lose one of its addable elements, so the count
    lowers the ``|chosen| + |addable|`` bound.
    """
    avail = chosen | addable
    used = 0
    packed = 0
    for j in _bits(addable):
        if used >> j & 1:
            continue
        for c in by_elem[j]:
            if c & ~avail == 0:
                part = c & addable
                if part & used == 0:
                    used |= part
                    packed += 1
                    break
    return packed


def maximize_free(
    size: int,
    copies: Sequence[int],
    objective: Optional[Callable[[int], int]] = None,
    upper: Optional[Callable[[int, int], int]] = None,
    budget: Optional[int] = None,
) -> tuple[int, int, int]:
    """Largest objective over copy-free subsets of ``range(size)``.

    Without ``objective`` the subset size is maximised and bounded by
    ``|chosen| + |addable|`` minus a packing of copies that must each lose
    an element. Otherwise ``upper(chosen, addable)`` must bound
    the objective of every free superset of ``chosen`` inside
    ``chosen | addable``. Returns ``(value, mask, nodes)``.
    """
    by_elem = _by_element(size, copies)
    counter = _Counter(budget)
    best_val, best_mask = -1, 0
    # packing pays off only while each element sits in few copies
    pack = sum(map(len, by_elem)) <= PACKING_DENSITY * max(size, 1)
    singletons = {c for c in copies if c & (c - 1) == 0}
    start = ((1 << size) - 1) & ~sum(singletons)

    def rec(chosen: int, count: int, addable: int):
        nonlocal best_val, best_mask
        counter.tick()
        value = count if objective is None else objective(chosen)
        if value > best_val:
            best_val, best_mask = value, chosen
        if objective is None:
            room = count + addable.bit_count()
            if room <= best_val or (pack and room - _packing(chosen, addable, by_elem) <= best_val):
                return
        elif upper(chosen, addable) <= best_val:
            return
        for j in _bits(addable):
            if objective is None and count + (addable >> j).bit_count() <= best_val:
                return
            new = chosen | (1 << j)
            rec(new, count + 1, _after_adding(j, new, addable, by_elem))

    rec(0, 0, start)
    return best_val, best_mask, counter.nodes


def count_free(size: int, copies: Sequence[int], budget: Optional[int] = None) -> tuple[dict[int, int], int]:
    """Number of copy-free subsets of ``range(size)`` by cardinality."""
    by_elem = _by_element(size, copies)
    counter = _Counter(budget)
    counts: dict[int, int] = {}
    singletons = {c for c in copies if c & (c - 1) == 0}
    start = ((1 << size) - 1) & ~sum(singletons)

    def rec(chosen: int, count: int, addable: int):
        counter.tick()
        counts[count] = counts.get(count, 0) + 1
        for j in _bits(addable):
            new = chosen | (1 << j)
            rec(new, count + 1, _after_adding(j, new, addable, by_elem))

    rec(0, 0, start)
    return counts, counter.nodes


def iter_free(size: int, copies: Sequence[int], budget: Optional[int] = None) -> Iterator[int]:
    """Every copy-free subset of ``range(size)`` as a bitmask, in DFS order."""
    by_elem = _by_element(size, copies)
    counter = _Counter(budget)
    singletons = {c for c in copies if c & (c - 1) == 0}
    stack = [(0, ((1 << size) - 1) & ~sum(singletons))]
    while stack:
        chosen, addable = stack.pop()
        counter.tick()
        yield chosen
        for j in reversed(list(_bits(addable))):
            new = chosen | (1 << j)
            stack.append((new, _after_adding(j, new, addable, by_elem)))


def girth5_hypergraphs(n: int, r: int, budget: Optional[int] = None) -> Iterator[Hypergraph]:
    """All labelled n-vertex r-graphs without Berge cycles of length 2, 3 or 4."""
    if r in CENSUS_LIMITS:
        _check_limit("n", n, CENSUS_LIMITS[r])
    ground = Ground(n, r)
    for mask in iter_free(len(ground), _copies("berge", ground, berge_cycle_family(4)), budget):
        yield ground.hypergraph(mask)


def _check_limit(what: str, value: int, limit: int):
    if value > limit:
        raise ResourceLimitError(f"{what} = {value} exceeds the documented limit {limit}")


def ex_graph(n: int, F: Patterns, budget: Optional[int] = None) -> SearchReport:
    """ex(n, F): most edges in an n-vertex graph with no copy of ``F``."""
    patterns = _as_list(F)
    _check_limit("n", n, GRAPH_LIMIT)
    start = time.perf_counter()
    ground = Ground(n, 2)
    value, mask, nodes = maximize_free(len(ground), _copies("graph", ground, patterns), budget=budget)
    return SearchReport("graph", n, 2, _family_name(patterns), value, ground.graph(mask),
                        nodes, time.perf_counter() - start)


def _clique_counter(ground: Ground, r: int) -> Callable[[int], int]:
    n = ground.n
    pair_bits = [(1 << u, 1 << v, u, v) for u, v in ground.sets]

    def k_r(mask: int) -> int:
        rows = [0] * n
        for i in _bits(mask):
            bu, bv, u, v = pair_bits[i]
            rows[u] |= bv
            rows[v] |= bu
        return _count_from_rows(rows, r)

    return k_r


def _count_from_rows(rows: list[int], m: int) -> int:
    if m == 1:
        return len(rows)
    higher = [row >> (v + 1) << (v + 1) for v, row in enumerate(rows)]

    def extend(cands: int, depth: int) -> int:
        if depth == 1:
            return cands.bit_count()
        return sum(extend(cands & higher[v], depth - 1) for v in _bits(cands))

    return sum(extend(higher[v], m - 1) for v in range(len(rows)))


def ex_generalized(n: int, r: int, F: Patterns, budget: Optional[int] = None) -> SearchReport:
    """ex(n, K_r, F): most copies of K_r in an n-vertex graph with no copy of ``F``."""
    patterns = _as_list(F)
    _check_limit("n", n, GENERALIZED_LIMIT)
    if r < 2:
        raise ValueError("clique size must be at least 2")
    start = time.perf_counter()
    ground = Ground(n, 2)
    k_r = _clique_counter(ground, r)
    value, mask, nodes = maximize_free(
        len(ground), _copies("generalized", ground, patterns),
        objective=k_r, upper=lambda chosen, addable: k_r(chosen | addable), budget=budget)
    return SearchReport("generalized", n, r, _family_name(patterns), value, ground.graph(mask),
                        nodes, time.perf_counter() - start)


def _hypergraph_search(mode: str, n: int, r: int, F: Patterns, budget: Optional[int]) -> SearchReport:
    patterns = _as_list(F)
    if r < 2:
        raise ValueError("uniformity must be at least 2")
    if mode == "expansion" and r < 3:
        raise ValueError("expansions need r >= 3")
    _check_limit("C(n, r)", math.comb(n, r), HYPERGRAPH_GROUND_LIMIT)
    start = time.perf_counter()
    ground = Ground(n, r)
    value, mask, nodes = maximize_free(len(ground), _copies(mode, ground, patterns), budget=budget)
    return SearchReport(mode, n, r, _family_name(patterns), value, ground.hypergraph(mask),
                        nodes, time.perf_counter() - start)


def ex_berge(n: int, r: int, F: Patterns, budget: Optional[int] = None) -> SearchReport:
    """ex_r(n, Berge-F) (or a family of Berge patterns) by exact search."""
    return _hypergraph_search("berge", n, r, F, budget)


def ex_expansion(n: int, r: int, F: Patterns, budget: Optional[int] = None) -> SearchReport:
    """ex_r(n, F+) by exact search."""
    return _hypergraph_search("expansion", n, r, F, budget)


def census_girth5(n: int, r: int, budget: Optional[int] = None) -> CensusTable:
    """Labelled n-vertex r-graphs with no Berge-C2, C3 or C4, counted by edges."""
    if r in CENSUS_LIMITS:
        _check_limit("n", n, CENSUS_LIMITS[r])
    else:
        _check_limit("C(n, r)", math.comb(n, r), 28)
    start = time.perf_counter()
    ground = Ground(n, r)
    counts, nodes = count_free(len(ground), _copies("berge", ground, berge_cycle_family(4)), budget)
    size = max(counts) if counts else 0
    table = {m: counts.get(m, 0) for m in range(size + 1)}
    return CensusTable(n, r, "B4", table, nodes, time.perf_counter() - start)


@dataclass(frozen=True)
class CliqueBoundCheck:
    n: int
    m: int
    s: int
    maximum: int
    bound: Fraction
    witness: Graph

    @property
    def holds(self) -> bool:
        return self.maximum <= self.bound


def max_cliques_k1s_bound_check(n: int, m: int, s: int, budget: Optional[int] = None) -> CliqueBoundCheck:
    """Most K_m copies over graphs with maximum degree < s, against ``(n/s) C(s, m)``."""
    if not 2 <= m <= s:
        raise ValueError("need 2 <= m <= s")
    report = ex_generalized(n, m, PatternGraph.star(s), budget)
    return CliqueBoundCheck(n, m, s, report.value, Fraction(n, s) * math.comb(s, m), report.witness)


def witness_is_free(report: SearchReport, F: Patterns) -> bool:
    """Re-check a report's witness with the direct containment tests."""
    patterns = _as_list(F)
    w = report.witness
    if report.mode in ("graph", "generalized"):
        for P in patterns:
            if len(set(P.edges)) != len(P.edges):
                continue
            if next(iter_embeddings(P, w.n, w.adj), None) is not None:
                return False
        return True
    if report.mode == "berge":
        return all(contains_berge(w, P) is None for P in patterns)
    return all(find_expansion(w, P) is None for P in patterns)


def witness_value(report: SearchReport) -> int:
    if report.mode == "generalized":
        return count_cliques(report.witness, report.r)
    return report.witness.num_edges

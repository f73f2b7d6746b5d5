"""Executable acceptance checks, grouped into suites.

Each check returns a ``CheckResult`` with the measured values it compared.
The oracles used here are deliberately different code paths from the ones
under test (naive subset enumeration, permutation search, direct codegree
matrices) so that a check cannot pass by agreeing with itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Callable, Iterable, Optional

import numpy as np

from .berge import PatternGraph
from .constructions import (
    FANO_LINES,
    bipartite_norm_graph,
    composite_graph,
    erdos_renyi_polarity,
)
from .counting import (
    codegree_matrix,
    composite_k4_expectation_exact,
    count_k22,
    is_kst_free,
    kw_bound_check,
    kw_parameters_for,
    split_k4_count,
)
from .field import norm_map
from .girth5 import greedy_girth5, verify_peel_independence
from .hypergraph import Graph, Hypergraph, codegrees, girth, is_linear
from .search import (
    berge_cycle_family,
    census_girth5,
    ex_berge,
    ex_expansion,
    ex_generalized,
    girth5_hypergraphs,
    max_cliques_k1s_bound_check,
    witness_is_free,
    witness_value,
)


@dataclass
class CheckResult:
    check_id: int
    anchor: str
    passed: Optional[bool]  # None for report-only checks
    values: dict = field(default_factory=dict)

    def status(self) -> str:
        return {True: "PASS", False: "FAIL", None: "INFO"}[self.passed]

    def to_text(self) -> str:
        vals = " ".join(f"{k}={v}" for k, v in self.values.items())
        return f"check {self.check_id} [{self.anchor}]: {self.status()} {vals}".rstrip()


@dataclass
class SuiteResult:
    suite: str
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed is not False for c in self.checks)

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}"] + [c.to_text() for c in self.checks]
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"


def _max_codegree(G: Graph) -> int:
    cod = codegree_matrix(G)
    np.fill_diagonal(cod, 0)
    return int(cod.max()) if G.n else 0


def check_polarity(qs: Iterable[int] = (3, 5, 7, 9)) -> CheckResult:
    values, ok = {}, True
    half_q2_match = cubic_match = True
    for q in qs:
        G = erdos_renyi_polarity(q)
        free = _max_codegree(G) <= 1 and is_kst_free(G, 2, 2)
        ok &= free
        e = G.num_edges
        half_q2_match &= 2 * e == q * q * (q - 1)
        cubic_match &= 2 * e == q ** 3 - q
        values[f"q{q}_edges"] = e
    values["matches_q2(q-1)/2"] = half_q2_match
    values["matches_(q3-q)/2"] = cubic_match
    return CheckResult(1, "polarity graphs are K22-free", ok, values)


def check_norm_graphs(params=((2, 3), (2, 5), (3, 3), (3, 5))) -> CheckResult:
    values, ok = {}, True
    for s, q in params:
        bg = bipartite_norm_graph(s, q)
        G = bg.graph
        m, d = q ** (s - 1) * (q - 1), q ** (s - 1) - 1
        sizes_ok = len(bg.part_a) == len(bg.part_b) == m
        degs = {G.degree(v) for v in range(G.n)}
        a_mask = sum(1 << v for v in bg.part_a)
        bipartite = all(not (G.adj[v] & a_mask) for v in bg.part_a)
        t = math.factorial(s - 1) + 1
        free = is_kst_free(G, s, t)
        good = sizes_ok and degs == {d} and bipartite and free
        ok &= good
        values[f"s{s}q{q}"] = f"part={m},deg={sorted(degs)},K{s},{t}-free={free}"
    return CheckResult(2, "bipartite norm graphs: size, regularity, biclique-freeness", ok, values)


def check_k22_bound(qs: Iterable[int] = (3, 5, 9), s: int = 3) -> CheckResult:
    values, ok = {}, True
    for q in qs:
        n, d = q ** (s - 1) * (q - 1), q ** (s - 1) - 1
        count = count_k22(bipartite_norm_graph(s, q).graph)
        bound = Fraction(n * d * (d - 1), 4) * (Fraction(d * (d - 1), n - 1) - 1)
        ok &= count >= bound
        values[f"q{q}"] = f"{count}>={float(bound):.1f}"
    return CheckResult(3, "K22 count of the norm graph meets the convexity bound", ok, values)


def check_composite(s: int = 3, q: int = 9, seeds: Iterable[int] = range(20)) -> CheckResult:
    seeds = list(seeds)
    first = composite_graph(s, q, seeds[0])
    G = first.graph
    ga = G.induced(list(first.part_a))
    gb = G.induced(list(first.part_b))
    a_free = _max_codegree(ga) <= 1
    b_free = _max_codegree(gb) <= 1
    cross_free = is_kst_free(first.cross_graph(), s, s)
    counts = [split_k4_count(first)] + [split_k4_count(composite_graph(s, q, sd)) for sd in seeds[1:]]
    mean = float(np.mean(counts))
    se = float(np.std(counts, ddof=1) / math.sqrt(len(counts))) if len(counts) > 1 else 0.0
    expect = float(composite_k4_expectation_exact(s, q))
    within = abs(mean - expect) <= 3 * se
    values = {
        "vertices": G.n, "edges": G.num_edges,
        "A_K22_free": a_free, "B_K22_free": b_free, f"cross_K{s},{s}_free": cross_free,
        "mc_mean": f"{mean:.2f}", "mc_se": f"{se:.2f}", "expected": f"{expect:.2f}",
    }
    return CheckResult(4, "composite graph sub-checks and split K4 expectation",
                       a_free and b_free and cross_free and within, values)


CHAIN_PATTERNS = (PatternGraph.complete(3), PatternGraph.complete_bipartite(2, 2), PatternGraph.path(3))


def check_chain(ns: Iterable[int] = range(4, 8), patterns=CHAIN_PATTERNS, r: int = 3) -> CheckResult:
    values, ok = {}, True
    for F in patterns:
        row = []
        for n in ns:
            reports = [ex_generalized(n, r, F), ex_berge(n, r, F), ex_expansion(n, r, F)]
            vals = [rep.value for rep in reports]
            valid = all(witness_is_free(rep, F) and witness_value(rep) == rep.value for rep in reports)
            ok &= valid and vals[0] <= vals[1] <= vals[2]
            row.append("/".join(map(str, vals)))
        values[F.name] = ",".join(row)
    return CheckResult(5, "clique count <= Berge <= expansion extremal numbers", ok, values)


def _isomorphic_to_fano(H: Hypergraph) -> bool:
    target = {frozenset(e) for e in FANO_LINES}
    if H.n != 7 or H.num_edges != 7:
        return False
    for perm in permutations(range(7)):
        if {frozenset(perm[v] for v in e) for e in H.edges} == target:
            return True
    return False


def _naive_max_free(n: int, r: int, is_free: Callable[[Hypergraph], bool]) -> int:
    ground = list(combinations(range(n), r))
    best = 0
    for mask in range(1 << len(ground)):
        size = mask.bit_count()
        if size > best and is_free(Hypergraph(n, r, tuple(e for i, e in enumerate(ground) if mask >> i & 1))):
            best = size
    return best


def _has_girth5(H: Hypergraph) -> bool:
    return not isinstance(girth(H, 4), int)


def check_small_extremal() -> CheckResult:
    c2 = ex_berge(7, 3, PatternGraph.cycle(2))
    w = c2.witness
    steiner = is_linear(w) and w.num_edges == 7 and all(c == 1 for c in codegrees(w).values())
    fano_iso = _isomorphic_to_fano(w)
    b4 = ex_berge(5, 3, berge_cycle_family(4))
    naive_b4 = _naive_max_free(5, 3, _has_girth5)
    ok = c2.value == 7 and steiner and fano_iso and b4.value == 2 and naive_b4 == 2
    values = {"ex3(7,C2)": c2.value, "fano_isomorphic": fano_iso,
              "ex3(5,B4)": b4.value, "naive_ex3(5,B4)": naive_b4}
    return CheckResult(6, "small Berge extremal numbers", ok, values)


def _naive_census(n: int, r: int) -> dict[int, int]:
    ground = list(combinations(range(n), r))
    counts: dict[int, int] = {}
    for mask in range(1 << len(ground)):
        H = Hypergraph(n, r, tuple(e for i, e in enumerate(ground) if mask >> i & 1))
        if _has_girth5(H):
            counts[H.num_edges] = counts.get(H.num_edges, 0) + 1
    return counts


CENSUS_POINTS = tuple((n, 3) for n in range(3, 7)) + tuple((n, 2) for n in range(2, 8))


def check_census(points=CENSUS_POINTS) -> CheckResult:
    values, ok = {}, True
    for n, r in [(n, r) for r in (3, 2) for n in range(r, 6)]:
        table = census_girth5(n, r)
        naive = _naive_census(n, r)
        same = {m: c for m, c in table.counts.items() if c} == naive
        ok &= same
        values[f"naive_n{n}r{r}"] = same
    t4 = census_girth5(4, 3)
    ok &= t4.counts == {0: 1, 1: 4}
    values["n4r3"] = dict(t4.counts)
    for n, r in points:
        table = census_girth5(n, r)
        ex = ex_berge(n, r, berge_cycle_family(4)).value
        good = table.total >= 2 ** ex and table.max_edges == ex
        ok &= good
        values[f"f(n{n}r{r})"] = f"{table.total}>=2^{ex}"
    return CheckResult(7, "girth-5 census against naive enumeration", ok, values)


def check_peel(greedy_count: int = 100, greedy_n: int = 12, seed: int = 0) -> CheckResult:
    census_total = census_ok = 0
    for n in range(3, 7):
        for H in girth5_hypergraphs(n, 3):
            census_total += 1
            census_ok += verify_peel_independence(H)
    rng = np.random.default_rng(seed)
    greedy_ok = 0
    edge_counts = []
    for _ in range(greedy_count):
        H = greedy_girth5(greedy_n, 3, rng=rng)
        edge_counts.append(H.num_edges)
        greedy_ok += verify_peel_independence(H)
    ok = census_ok == census_total and greedy_ok == greedy_count
    values = {"census": f"{census_ok}/{census_total}", "greedy": f"{greedy_ok}/{greedy_count}",
              "greedy_edges": f"{min(edge_counts)}..{max(edge_counts)}"}
    return CheckResult(8, "peel neighbourhoods independent in the 2-path graph", ok, values)


def check_norm_map(params=((3, 3), (3, 5))) -> CheckResult:
    values, ok = {}, True
    for s, q in params:
        nm = norm_map(s, q)
        ext, base = nm.extension, nm.base
        table = np.asarray(nm.table)
        mult = all(table[ext.mul(x, y)] == base.mul(int(table[x]), int(table[y]))
                   for x in range(ext.order) for y in range(ext.order))
        fibers = np.bincount(table, minlength=q)
        want = (q ** (s - 1) - 1) // (q - 1)
        uniform = bool(fibers[0] == 1 and np.all(fibers[1:] == want))
        ok &= mult and uniform
        values[f"s{s}q{q}"] = f"multiplicative={mult},fiber={sorted(set(fibers[1:].tolist()))}"
    return CheckResult(9, "norm map is multiplicative with uniform fibres", ok, values)


def check_kw(count: int = 50, seed: int = 0) -> CheckResult:
    rng = np.random.default_rng(seed)
    held = tried = 0
    rows = 0
    while held < count and tried < 5 * count:
        tried += 1
        n = int(rng.integers(8, 19))
        p = float(rng.uniform(0.4, 0.9))
        upper = np.triu(rng.random((n, n)) < p, k=1)
        G = Graph.from_matrix(upper | upper.T)
        params = kw_parameters_for(G)
        if params is None:
            continue
        report = kw_bound_check(G, params)
        if not report.hypotheses_certified:
            continue
        if not report.holds:
            return CheckResult(10, "independent-set container bound", False,
                               {"failed_graph": tried, "n": n})
        held += 1
        rows += len(report.rows)
    return CheckResult(10, "independent-set container bound", held == count,
                       {"graphs": f"{held}/{count}", "inequalities": rows})


def check_clique_bound(max_n: int = 7, max_s: int = 4) -> CheckResult:
    values, ok, checked = {}, True, 0
    for n in range(2, max_n + 1):
        for s in range(2, max_s + 1):
            for m in range(2, s + 1):
                res = max_cliques_k1s_bound_check(n, m, s)
                checked += 1
                if not res.holds:
                    ok = False
                    values[f"n{n}m{m}s{s}"] = f"{res.maximum}>{res.bound}"
    values["cases"] = checked
    return CheckResult(11, "clique count under bounded degree", ok, values)


def trend_report(ns: Iterable[int] = range(5, 9)) -> CheckResult:
    values = {}
    for n in ns:
        ex = ex_berge(n, 3, berge_cycle_family(4)).value
        values[f"n{n}"] = f"{ex}*6/n^1.5={ex * 6 / n ** 1.5:.3f}"
    return CheckResult(12, "girth-5 3-graph trend (report only)", None, values)


SUITES: dict[str, list[Callable[[], CheckResult]]] = {
    "constructions": [check_polarity, check_norm_graphs, check_k22_bound, check_composite, check_norm_map],
    "chain": [check_chain, check_small_extremal, check_clique_bound],
    "census": [check_census, check_peel, trend_report],
    "kw": [check_kw],
}


def suite_checks(name: str) -> list[Callable[[], CheckResult]]:
    if name == "all":
        checks = [c for group in SUITES.values() for c in group]
        order = {c: i for i, c in enumerate([
            check_polarity, check_norm_graphs, check_k22_bound, check_composite, check_chain,
            check_small_extremal, check_census, check_peel, check_norm_map, check_kw,
            check_clique_bound, trend_report])}
        return sorted(checks, key=order.__getitem__)
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return SUITES[name]


def run_suite(name: str, on_result: Optional[Callable[[CheckResult], None]] = None) -> SuiteResult:
    results = []
    for check in suite_checks(name):
        res = check()
        results.append(res)
        if on_result:
            on_result(res)
    return SuiteResult(name, results)

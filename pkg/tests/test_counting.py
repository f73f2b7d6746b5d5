import math
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bergetools.constructions import bipartite_norm_graph, erdos_renyi_polarity
from bergetools.counting import (
    KwParameters,
    composite_k4_expectation_exact,
    count_cliques,
    count_independent_sets,
    count_k22,
    find_kst,
    generalized_binomial,
    independence_counts,
    is_kst_free,
    kw_bound_check,
    kw_parameters_for,
    min_density_above,
)
from bergetools.errors import ResourceLimitError
from bergetools.hypergraph import Graph


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    return Graph.from_edges(n, draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else [])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_clique_examples():
    assert count_cliques(Graph.complete(5), 4) == 5
    assert count_cliques(petersen(), 3) == 0
    assert count_cliques(petersen(), 2) == 15
    with pytest.raises(ValueError):
        count_cliques(petersen(), 0)


@settings(max_examples=60, deadline=None)
@given(graphs(), st.integers(1, 4))
def test_cliques_match_brute_force(G, m):
    brute = sum(1 for S in combinations(range(G.n), m)
                if all(G.has_edge(a, b) for a, b in combinations(S, 2)))
    assert count_cliques(G, m) == brute


def _brute_kst(G, s, t):
    for S in combinations(range(G.n), s):
        common = [v for v in range(G.n) if v not in S and all(G.has_edge(v, u) for u in S)]
        if len(common) >= t:
            return True
    return False


@settings(max_examples=80, deadline=None)
@given(graphs(), st.integers(1, 3), st.integers(0, 2))
def test_kst_matches_brute_force(G, s, extra):
    t = s + extra
    found = find_kst(G, s, t)
    assert (found is not None) == _brute_kst(G, s, t)
    if found:
        S, T = found
        assert len(S) == s and len(T) == t and not set(S) & set(T)
        assert all(G.has_edge(a, b) for a in S for b in T)


def test_kst_examples():
    assert not is_kst_free(cycle(4), 2, 2)
    assert is_kst_free(erdos_renyi_polarity(3), 2, 2)
    assert is_kst_free(bipartite_norm_graph(3, 3).graph, 3, 3)
    with pytest.raises(ValueError):
        is_kst_free(cycle(4), 3, 2)


def _brute_k22(G):
    total = 0
    for quad in combinations(range(G.n), 4):
        a, b, c, d = quad
        # the three ways to close four vertices into a 4-cycle
        for w, x, y, z in [(a, b, c, d), (a, b, d, c), (a, c, b, d)]:
            if G.has_edge(w, x) and G.has_edge(x, y) and G.has_edge(y, z) and G.has_edge(z, w):
                total += 1
    return total


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_k22_matches_brute_force(G):
    assert count_k22(G) == _brute_k22(G)


def test_k22_examples():
    assert count_k22(cycle(4)) == 1
    assert count_k22(Graph.from_edges(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])) == 3
    assert count_k22(bipartite_norm_graph(3, 3).graph) == _brute_k22(bipartite_norm_graph(3, 3).graph)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9))
def test_independence_counts_match_brute_force(G):
    counts = independence_counts(G)
    for d in range(G.n + 1):
        brute = sum(1 for S in combinations(range(G.n), d)
                    if not any(G.has_edge(a, b) for a, b in combinations(S, 2)))
        assert counts[d] == brute


def test_independent_set_examples():
    assert count_independent_sets(Graph.empty(4), 2) == 6
    assert count_independent_sets(petersen(), 0) == 1
    assert count_independent_sets(cycle(4), 2) == 2
    with pytest.raises(ResourceLimitError):
        count_independent_sets(petersen(), 3, budget=2)


def test_generalized_binomial():
    assert generalized_binomial(5, 2) == 10
    assert generalized_binomial(Fraction(5, 2), 2) == Fraction(15, 8)
    assert generalized_binomial(Fraction(3, 2), 3) == 0
    assert generalized_binomial(7, 0) == 1


def test_kw_parameters_validation():
    with pytest.raises(ValueError):
        KwParameters(1.0, 1, 2.0)
    with pytest.raises(ValueError):
        KwParameters(0.5, -1, 2.0)


def test_kw_complete_graph_trivially_holds():
    G = Graph.complete(6)
    report = kw_bound_check(G, KwParameters(0.99, 2, 2.0))
    assert report.hypotheses_certified and report.holds
    assert all(ind == 0 for m, ind, _ in report.rows if m >= 2)


def test_kw_size_condition_failure():
    report = kw_bound_check(cycle(6), KwParameters(0.1, 0, 1.0))
    assert not report.size_condition and report.holds is None
    assert "size" in report.failure


def test_kw_density_refuted():
    report = kw_bound_check(Graph.empty(5), KwParameters(0.5, 10, 2.0))
    assert report.density == "refuted" and report.holds is None


def _brute_min_density(G, R):
    best = Fraction(1)
    for u in range(max(2, math.ceil(R)), G.n + 1):
        for U in combinations(range(G.n), u):
            e = sum(1 for a, b in combinations(U, 2) if G.has_edge(a, b))
            best = min(best, Fraction(e, math.comb(u, 2)))
    return best


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=8), st.integers(2, 5))
def test_min_density_matches_brute_force(G, R):
    assert min_density_above(G, R) == _brute_min_density(G, R)


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=10))
def test_kw_bound_on_random_graphs(G):
    params = kw_parameters_for(G)
    if params is None:
        return
    report = kw_bound_check(G, params)
    assert report.hypotheses_certified
    assert report.holds


def test_composite_expectation_formula():
    value = composite_k4_expectation_exact(3, 9)
    Q = 27
    p = Fraction(2 * (Q ** 3 - Q) // 2, Q * Q * (Q * Q - 1))
    assert value == count_k22(bipartite_norm_graph(3, 9).graph) * p * p

from itertools import combinations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from bergetools.berge import (
    PatternGraph,
    bipartite_matching,
    bounded_codegree_pair,
    contains_berge,
    contains_expansion,
    expand,
    find_expansion,
)
from bergetools.constructions import fano
from bergetools.errors import PreconditionError, ResourceLimitError
from bergetools.hypergraph import Hypergraph, codegree, shadow

from oracles import has_subgraph, naive_berge

SMALL_PATTERNS = [
    PatternGraph.cycle(2),
    PatternGraph.cycle(3),
    PatternGraph.path(2),
    PatternGraph.star(3),
    PatternGraph.complete(3),
]


@st.composite
def small_hypergraphs(draw, max_n=6, max_edges=5):
    n = draw(st.integers(3, max_n))
    pool = list(combinations(range(n), 3))
    return Hypergraph(n, 3, draw(st.lists(st.sampled_from(pool), unique=True, max_size=max_edges)))


def test_pattern_parsing():
    assert PatternGraph.parse("C4").edges == ((0, 1), (1, 2), (2, 3), (0, 3))
    assert PatternGraph.parse("P3").num_edges == 3 and PatternGraph.parse("P3").n == 4
    assert PatternGraph.parse("K2,3").num_edges == 6
    assert PatternGraph.parse("K4").num_edges == 6
    assert PatternGraph.parse("C2").multiplicity(0, 1) == 2
    with pytest.raises(ValueError):
        PatternGraph.parse("Q7")


def test_berge_c2_needs_two_edges_on_a_pair():
    F = PatternGraph.cycle(2)
    H = Hypergraph(4, 3, [(0, 1, 2), (0, 1, 3)])
    w = contains_berge(H, F)
    assert w is not None and w.is_valid(H, F)
    assert contains_berge(fano(), F) is None


def test_fano_contains_berge_triangle():
    w = contains_berge(fano(), PatternGraph.cycle(3))
    assert w is not None and w.is_valid(fano(), PatternGraph.cycle(3))


def test_single_edge_is_k3_shadow_but_not_berge_k3():
    H = Hypergraph(3, 3, [(0, 1, 2)])
    assert has_subgraph(shadow(H), PatternGraph.complete(3))
    assert contains_berge(H, PatternGraph.complete(3)) is None


def test_fano_contains_berge_k4():
    # the complement of a line is a 4-set whose 6 pairs sit on 6 distinct lines
    F = PatternGraph.complete(4)
    w = contains_berge(fano(), F)
    assert w is not None and w.is_valid(fano(), F)
    assert set(w.core_map) == {0, 1, 3, 6}


def test_fano_contains_k3_expansion():
    F = PatternGraph.complete(3)
    w = find_expansion(fano(), F)
    assert w is not None and w.is_expansion(fano(), F)
    assert naive_berge(fano(), F, expansion=True)


def test_expand_shape():
    E = expand(PatternGraph.complete(3), 4)
    assert E.hypergraph.n == 9 and E.hypergraph.num_edges == 3 and E.core == (0, 1, 2)
    assert contains_expansion(E.hypergraph, PatternGraph.complete(3))
    with pytest.raises(ValueError):
        expand(PatternGraph.complete(3), 2)


def test_expansion_limits():
    H = Hypergraph(5, 3, [(0, 1, 2)])
    with pytest.raises(ValueError):
        find_expansion(H, PatternGraph.complete(3), r=4)
    with pytest.raises(ResourceLimitError):
        find_expansion(Hypergraph(16, 3, []), PatternGraph.complete(5))


def test_budget_exhaustion_raises():
    with pytest.raises(ResourceLimitError):
        contains_berge(fano(), PatternGraph.complete(4), budget=1)


def test_bipartite_matching():
    assert bipartite_matching([[0, 1], [0]]) == [1, 0]
    assert bipartite_matching([[0], [0]]) is None
    assert bipartite_matching([]) == []


@settings(max_examples=40, deadline=None)
@given(small_hypergraphs(), st.sampled_from(SMALL_PATTERNS))
def test_contains_berge_matches_naive(H, F):
    w = contains_berge(H, F)
    assert (w is not None) == naive_berge(H, F)
    if w is not None:
        assert w.is_valid(H, F)


@settings(max_examples=40, deadline=None)
@given(small_hypergraphs(max_n=7), st.sampled_from(SMALL_PATTERNS[1:]))
def test_find_expansion_matches_naive(H, F):
    w = find_expansion(H, F)
    assert (w is not None) == naive_berge(H, F, expansion=True)
    if w is not None:
        assert w.is_expansion(H, F)


@settings(max_examples=40, deadline=None)
@given(small_hypergraphs(), st.sampled_from(SMALL_PATTERNS))
def test_expansion_implies_berge(H, F):
    if contains_expansion(H, F):
        assert contains_berge(H, F) is not None


@settings(max_examples=60, deadline=None)
@given(small_hypergraphs(), st.sampled_from(SMALL_PATTERNS[1:]))
def test_bounded_codegree_pair_on_berge_free_inputs(H, F):
    assume(contains_berge(H, F) is None)
    pair = bounded_codegree_pair(H, F)
    if has_subgraph(shadow(H), PatternGraph(F.n, tuple(F.simple_edges()))):
        assert pair is not None and codegree(H, *pair) < F.num_edges
    else:
        assert pair is None


def test_bounded_codegree_pair_examples():
    assert bounded_codegree_pair(Hypergraph(3, 3, [(0, 1, 2)]), PatternGraph.complete(3)) is not None
    assert bounded_codegree_pair(Hypergraph(6, 3, [(0, 1, 2)]), PatternGraph.complete(4)) is None
    pair = bounded_codegree_pair(fano(), PatternGraph.complete(4))
    assert codegree(fano(), *pair) == 1


def test_bounded_codegree_pair_detects_dense_copy():
    # every pair of a K4 lies on 6 of these triples, so the first copy is fully loaded
    triples = list(combinations(range(4), 3)) + [(a, b, c) for a, b in combinations(range(4), 2)
                                                 for c in range(4, 9)]
    H = Hypergraph(9, 3, triples)
    with pytest.raises(PreconditionError):
        bounded_codegree_pair(H, PatternGraph.complete(4))

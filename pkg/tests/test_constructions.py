from itertools import combinations

import pytest

from bergetools.constructions import (
    bipartite_norm_graph,
    composite_graph,
    composite_parameters,
    erdos_renyi_polarity,
    fano,
    norm_graph,
)
from bergetools.counting import is_kst_free
from bergetools.field import field_of_order, norm_map
from bergetools.formats import format_hypergraph, parse_hypergraph


def _common(G, u, v):
    return (G.adj[u] & G.adj[v]).bit_count()


@pytest.mark.parametrize("q", [3, 5, 7])
def test_polarity_has_no_two_common_neighbours(q):
    G = erdos_renyi_polarity(q)
    assert G.n == q * q
    assert all(_common(G, u, v) <= 1 for u, v in combinations(range(G.n), 2))
    assert G.num_edges == (q ** 3 - q) // 2


def test_polarity_adjacency_rule():
    F = field_of_order(5)
    G = erdos_renyi_polarity(5)
    for a1, a2, b1, b2 in [(0, 1, 2, 2), (3, 4, 1, 0), (1, 1, 2, 3)]:
        u, v = a1 * 5 + a2, b1 * 5 + b2
        if u != v:
            assert G.has_edge(u, v) == (F.add(a1, b1) == F.mul(a2, b2))


def test_norm_graph_against_element_arithmetic():
    s, q = 3, 3
    nm = norm_map(s, q)
    ext, base = nm.extension, nm.base
    G = norm_graph(s, q)
    labels = [(x1, x2) for x1 in range(ext.order) for x2 in range(1, q)]
    for i, (x1, x2) in enumerate(labels):
        for j, (y1, y2) in enumerate(labels):
            if i == j:
                continue
            want = nm(ext(x1) + ext(y1)) == base(x2) * base(y2)
            assert G.has_edge(i, j) == want


@pytest.mark.parametrize("s,q", [(2, 3), (3, 3), (2, 5)])
def test_bipartite_norm_graph_shape(s, q):
    bg = bipartite_norm_graph(s, q)
    m = q ** (s - 1) * (q - 1)
    assert len(bg.part_a) == len(bg.part_b) == m
    assert {bg.graph.degree(v) for v in range(2 * m)} == {q ** (s - 1) - 1}


@pytest.mark.parametrize("s,q", [(2, 2), (1, 3), (3, 6)])
def test_invalid_norm_parameters(s, q):
    with pytest.raises(ValueError):
        norm_graph(s, q)


def test_composite_parameters():
    assert composite_parameters(3, 9) == {"Q": 27, "part": 729, "sub": 648}
    for bad in [(3, 3), (2, 9), (3, 5)]:
        with pytest.raises(ValueError):
            composite_parameters(*bad)


def test_composite_structure_and_determinism():
    c = composite_graph(3, 9, seed=5)
    again = composite_graph(3, 9, seed=5)
    other = composite_graph(3, 9, seed=6)
    assert c.graph == again.graph and c.graph != other.graph
    assert c.graph.n == 1458
    e_polarity = (27 ** 3 - 27) // 2
    e_cross = 648 * 80
    assert c.graph.num_edges == 2 * e_polarity + e_cross
    assert c.cross_graph().num_edges == e_cross
    assert is_kst_free(c.graph.induced(list(c.part_a)), 2, 2)
    assert format_hypergraph(c.graph, "x") == format_hypergraph(again.graph, "x")


def test_fano_round_trip():
    assert parse_hypergraph(format_hypergraph(fano())) == fano()

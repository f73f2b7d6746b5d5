"""Exact small-scale tools for Berge hypergraphs, norm-graph constructions and Turán-type searches."""

from .berge import (
    BergeWitness,
    PatternGraph,
    bounded_codegree_pair,
    contains_berge,
    contains_expansion,
    expand,
    find_expansion,
)
from .constructions import (
    bipartite_norm_graph,
    composite_graph,
    erdos_renyi_polarity,
    fano,
    norm_graph,
)
from .counting import (
    KwParameters,
    composite_k4_expectation,
    count_cliques,
    count_independent_sets,
    count_k22,
    is_kst_free,
    kw_bound_check,
)
from .errors import ParseError, PreconditionError, ResourceLimitError
from .field import GF, FiniteField, norm, norm_map
from .formats import format_hypergraph, parse_hypergraph, read_hypergraph, write_hypergraph
from .girth5 import greedy_girth5, kw_auxiliary_graph, verify_peel_independence
from .hypergraph import (
    Graph,
    Hypergraph,
    codegree,
    extract_d_full,
    girth,
    is_linear,
    min_degree_peel,
    shadow,
)
from .report import CensusTable, SearchReport
from .search import (
    census_girth5,
    ex_berge,
    ex_expansion,
    ex_generalized,
    ex_graph,
    max_cliques_k1s_bound_check,
)

__version__ = "0.1.0"

__all__ = [
    "BergeWitness",
    "bipartite_norm_graph",
    "bounded_codegree_pair",
    "census_girth5",
    "CensusTable",
    "codegree",
    "composite_graph",
    "composite_k4_expectation",
    "contains_berge",
    "contains_expansion",
    "count_cliques",
    "count_independent_sets",
    "count_k22",
    "erdos_renyi_polarity",
    "ex_berge",
    "ex_expansion",
    "ex_generalized",
    "ex_graph",
    "expand",
    "extract_d_full",
    "fano",
    "find_expansion",
    "FiniteField",
    "format_hypergraph",
    "GF",
    "girth",
    "Graph",
    "greedy_girth5",
    "Hypergraph",
    "is_kst_free",
    "is_linear",
    "kw_auxiliary_graph",
    "kw_bound_check",
    "KwParameters",
    "max_cliques_k1s_bound_check",
    "min_degree_peel",
    "norm",
    "norm_graph",
    "norm_map",
    "parse_hypergraph",
    "ParseError",
    "PatternGraph",
    "PreconditionError",
    "read_hypergraph",
    "ResourceLimitError",
    "SearchReport",
    "shadow",
    "verify_peel_independence",
    "write_hypergraph",
]

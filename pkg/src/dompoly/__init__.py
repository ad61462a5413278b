"""Exact domination polynomials and D-equivalence verification for small graphs."""

from .graph import (
    Graph,
    GraphError,
    Graph6Error,
    closed_neighborhood,
    complement,
    connected_components,
    from_graph6,
    join,
    nonneighbor_set,
    to_graph6,
)
from .canon import canonical_form, is_isomorphic
from .constructions import (
    PartitionSpec,
    complete_multipartite,
    equipartite,
    h_graph,
    j_graph,
    join_all,
    parse_expression,
)
from .polynomial import (
    BudgetError,
    Polynomial,
    SetFamily,
    is_dominating,
    polynomial,
    polynomial_bruteforce,
    polynomial_join,
)

__all__ = [
    "Graph", "GraphError", "Graph6Error", "closed_neighborhood", "complement",
    "connected_components", "from_graph6", "join", "nonneighbor_set", "to_graph6",
    "canonical_form", "is_isomorphic", "PartitionSpec", "complete_multipartite",
    "equipartite", "h_graph", "j_graph", "join_all", "parse_expression",
    "BudgetError", "Polynomial", "SetFamily", "is_dominating", "polynomial",
    "polynomial_bruteforce", "polynomial_join",
]

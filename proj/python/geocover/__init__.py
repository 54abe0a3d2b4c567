"""Geodesic cover numbers of multigraphs and path-system classification."""

from ._core import (
    BudgetExhausted,
    ContractError,
    Graph,
    ParseError,
    atlas,
    atlas_mismatches,
    check_cover,
    classify_three,
    classify_two,
    cover_number,
    distinct_optimal_covers,
    lower_bound,
    standard_graph_tags,
    to_dot,
    upper_bound,
)

__all__ = [
    "BudgetExhausted",
    "ContractError",
    "Graph",
    "ParseError",
    "atlas",
    "atlas_mismatches",
    "check_cover",
    "classify_three",
    "classify_two",
    "cover_number",
    "distinct_optimal_covers",
    "lower_bound",
    "standard_graph_tags",
    "to_dot",
    "upper_bound",
]

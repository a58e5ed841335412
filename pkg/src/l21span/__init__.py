"""Exact L(2,1)-span of small graphs in polynomial space."""

from .graph import Graph, GraphError, dist_le2, generate, is_2packing, square
from .io import ParseError, parse_graph, serialize_graph
from .labeling import Instance, is_valid_labeling, reverse, shift, span_of
from .oracle import BudgetExceeded, OracleBudget, oracle_decide, oracle_lambda, oracle_span
from .solver import (
    RunStats,
    SolverOptions,
    SolverTimeout,
    base_case_span,
    enumerate_correct_partitions,
    find_labeling,
    find_lambda,
    kx_value,
    lambda_span,
    solve_span,
)

__all__ = [
    "Graph", "GraphError", "dist_le2", "generate", "is_2packing", "square",
    "ParseError", "parse_graph", "serialize_graph",
    "Instance", "is_valid_labeling", "reverse", "shift", "span_of",
    "BudgetExceeded", "OracleBudget", "oracle_decide", "oracle_lambda", "oracle_span",
    "RunStats", "SolverOptions", "SolverTimeout", "base_case_span",
    "enumerate_correct_partitions", "find_labeling", "find_lambda", "kx_value",
    "lambda_span", "solve_span",
]

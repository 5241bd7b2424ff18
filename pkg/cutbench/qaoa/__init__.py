"""Depth-1 QAOA: per-edge formula, grid search and statevector oracle."""
from cutbench.qaoa.analytic import (
    EdgeGroup,
    edge_cut_prob,
    edge_groups,
    expected_cut_param,
    graph_expectation,
    groups_for_graph,
    karloff_triangle_free_ratio,
    limiting_ratio,
    triangle_free_angles,
    triangle_free_optimum,
)
from cutbench.qaoa.grid import grid_search, karloff_f1, karloff_f1_ratio
from cutbench.qaoa.report import QaoaReport, qaoa_report
from cutbench.qaoa.statevector import (
    StatevectorSimulator,
    statevector_expectation,
    statevector_search,
)

__all__ = [
    "EdgeGroup",
    "edge_cut_prob",
    "edge_groups",
    "expected_cut_param",
    "graph_expectation",
    "groups_for_graph",
    "karloff_triangle_free_ratio",
    "limiting_ratio",
    "triangle_free_angles",
    "triangle_free_optimum",
    "grid_search",
    "karloff_f1",
    "karloff_f1_ratio",
    "QaoaReport",
    "qaoa_report",
    "StatevectorSimulator",
    "statevector_expectation",
    "statevector_search",
]

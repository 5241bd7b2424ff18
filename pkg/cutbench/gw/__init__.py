"""Goemans-Williamson pipeline: embeddings, rounding, SDP solving, reports."""
from cutbench.gw.embeddings import karloff_dual_vector, karloff_embedding, srg_embedding
from cutbench.gw.report import GwReport, gw_report
from cutbench.gw.rounding import (
    RoundingStats,
    embedding_value,
    hp_expectation,
    hyperplane_round,
    monte_carlo_rounding,
)
from cutbench.gw.sdp import bm_solve, dual_check

__all__ = [
    "GwReport",
    "RoundingStats",
    "bm_solve",
    "dual_check",
    "embedding_value",
    "gw_report",
    "hp_expectation",
    "hyperplane_round",
    "karloff_dual_vector",
    "karloff_embedding",
    "monte_carlo_rounding",
    "srg_embedding",
]

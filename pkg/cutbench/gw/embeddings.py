"""Closed-form optimal SDP embeddings and dual vectors."""
from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from cutbench.core.errors import BudgetExceededError, DomainError
from cutbench.core.models import Embedding, Graph, KarloffParams, SrgParams
from cutbench.families.karloff import (
    DEFAULT_VERTEX_BUDGET,
    karloff_min_eigenvalue,
    karloff_vertex_count,
    membership_matrix,
)
from cutbench.families.srg import srg_eigenvalues, srg_eigenvalues_exact
from cutbench.graphs.queries import check_srg, is_primitive
from cutbench.spectral.eigen import DEFAULT_DENSE_BUDGET, EigenMethod, eigenspace_embedding


def karloff_embedding(p: KarloffParams, vertex_budget: int = DEFAULT_VERTEX_BUDGET) -> Embedding:
    """
    Optimal SDP vectors for J(m, m/2, b).

    Vertex S maps to the vector in R^m with entry +1/sqrt(m) at positions in
    S and -1/sqrt(m) elsewhere, so adjacent vertices meet at inner product
    4b/m - 1. Rows follow the same lexicographic order as karloff_generate.
    """
    n = karloff_vertex_count(p)
    if n > vertex_budget:
        raise BudgetExceededError(f"{p.label} has {n} vertices, budget is {vertex_budget}")
    signs = 2.0 * membership_matrix(p) - 1.0
    return Embedding(vectors=signs / math.sqrt(p.m))


def karloff_dual_vector(p: KarloffParams) -> np.ndarray:
    """Dual multipliers zeta_i = -C(m/2, b)^2 (4b/m - 1), constant over vertices."""
    value = -karloff_min_eigenvalue(p)
    return np.full(karloff_vertex_count(p), float(value))


def _srg_params(g: Graph) -> SrgParams:
    params = check_srg(g)
    if params is None:
        raise DomainError("graph is not strongly regular")
    if not is_primitive(g):
        raise DomainError(f"SRG{params.as_tuple()} is imprimitive (it or its complement is disconnected)")
    return params


def srg_embedding(
    g: Graph,
    *,
    method: EigenMethod = "lapack",
    budget: int = DEFAULT_DENSE_BUDGET,
) -> Embedding:
    """
    Optimal SDP vectors of a primitive strongly regular graph.

    The vectors span the eigenspace of the smallest eigenvalue xi2, and
    adjacent vertices meet at inner product xi2 / k.

    Raises:
        DomainError: If ``g`` is not a primitive SRG.
    """
    params = _srg_params(g)
    xi2 = srg_eigenvalues(params)[1]
    return eigenspace_embedding(g.adjacency_matrix(weighted=False), xi2, method=method, budget=budget)


def srg_dual_vector(g: Graph) -> np.ndarray:
    """
    Dual multipliers zeta_i = -xi2 for a primitive SRG.

    A + diag(zeta) then has smallest eigenvalue 0 and the dual value equals
    (|E|/2)(1 - xi2/k).
    """
    params = _srg_params(g)
    return np.full(g.n, -srg_eigenvalues(params)[1])


def srg_edge_inner_product(s: SrgParams) -> Fraction | float:
    """xi2 / k, exact when the spectrum is rational."""
    exact = srg_eigenvalues_exact(s)
    if exact is not None:
        return exact[1] / s.k
    return srg_eigenvalues(s)[1] / s.k

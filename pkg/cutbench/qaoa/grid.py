"""
Grid search over depth-1 QAOA angles.

The per-edge formula separates into gamma-only and beta-only factors, so
F_1 on a G x B grid is ``E/2 + ¼ S1(γ) ⊗ sin 4β - ¼ S2(γ) ⊗ sin² 2β``. Rows
are evaluated in chunks and the maximum is folded in row-major order, so
the first maximal (i, j) wins regardless of chunk size.
"""
from __future__ import annotations

import logging
import math
from collections.abc import Sequence

import numpy as np
from scipy.optimize import minimize

from cutbench.core.config import GridSpec
from cutbench.core.errors import DomainError
from cutbench.core.models import Graph, KarloffParams, QaoaAngles
from cutbench.families.karloff import (
    karloff_common_neighbors,
    karloff_degree,
    karloff_edge_count,
    karloff_maxcut,
)
from cutbench.qaoa.analytic import (
    EdgeGroup,
    edge_terms,
    groups_expectation,
    groups_for_graph,
    karloff_triangle_free_ratio,
)

logger = logging.getLogger("cutbench.qaoa")

_CHUNK_CELLS = 4_000_000

GridTarget = Graph | EdgeGroup | Sequence[EdgeGroup]


def _as_groups(target: GridTarget) -> list[EdgeGroup]:
    if isinstance(target, Graph):
        return groups_for_graph(target)
    if isinstance(target, EdgeGroup):
        return [target]
    return list(target)


def _gamma_profiles(
    groups: list[EdgeGroup], gammas: np.ndarray
) -> tuple[float, np.ndarray, np.ndarray]:
    total = math.fsum(float(grp.count) for grp in groups)
    s1 = np.zeros_like(gammas)
    s2 = np.zeros_like(gammas)
    for grp in groups:
        a, b = edge_terms(gammas, grp.du, grp.dv, grp.lam)
        s1 += float(grp.count) * a
        s2 += float(grp.count) * b
    return total, s1, s2


def _polish(groups: list[EdgeGroup], start: QaoaAngles, spec: GridSpec) -> QaoaAngles:
    def cost(angles: np.ndarray) -> float:
        return -groups_expectation(groups, float(angles[0]), float(angles[1]))

    result = minimize(
        cost,
        np.array([start.gamma, start.beta]),
        method="Nelder-Mead",
        bounds=[spec.gamma_bounds, spec.beta_bounds],
        options={"xatol": 1e-10, "fatol": 1e-12, "maxiter": 2000},
    )
    value = -float(result.fun)
    if not result.success:
        logger.debug("Nelder-Mead polish stopped early: %s", result.message)
    if value <= start.value:
        return start
    return QaoaAngles(gamma=float(result.x[0]), beta=float(result.x[1]), value=value)


def grid_search(
    target: GridTarget,
    spec: GridSpec | None = None,
    *,
    polish: bool = False,
) -> QaoaAngles:
    """
    Maximize F_1 over a uniform angle grid.

    Args:
        target: A unit-weight graph (each edge uses its own local
            parameters) or edge groups with counts.
        spec: The grid; defaults to 1000 x 1000 over the canonical domain.
        polish: Refine the grid optimum with a bounded Nelder-Mead run. The
            polished point is kept only if it improves the value.

    Returns:
        The best angles and F_1 there. Ties go to the smallest (i, j).

    Raises:
        IncompatibleOptionsError: If a weighted graph is supplied.
    """
    spec = spec or GridSpec()
    groups = _as_groups(target)
    gammas = np.asarray(spec.gammas(), dtype=np.float64)
    betas = np.asarray(spec.betas(), dtype=np.float64)
    total, s1, s2 = _gamma_profiles(groups, gammas)
    sin4b = np.sin(4 * betas)
    sin2b_sq = np.sin(2 * betas) ** 2

    rows = max(1, _CHUNK_CELLS // len(betas))
    best_value, best_i, best_j = -math.inf, 0, 0
    for start in range(0, len(gammas), rows):
        stop = min(start + rows, len(gammas))
        block = total / 2 + 0.25 * np.outer(s1[start:stop], sin4b) - 0.25 * np.outer(
            s2[start:stop], sin2b_sq
        )
        flat = int(np.argmax(block))
        value = float(block.flat[flat])
        if value > best_value:
            best_value = value
            best_i, best_j = start + flat // len(betas), flat % len(betas)

    angles = QaoaAngles(gamma=float(gammas[best_i]), beta=float(betas[best_j]), value=best_value)
    logger.debug(
        "Grid %s optimum F1=%.6f at gamma=%.6f beta=%.6f",
        spec.label, angles.value, angles.gamma, angles.beta,
    )
    return _polish(groups, angles, spec) if polish and groups else angles


def karloff_f1(p: KarloffParams, spec: GridSpec | None = None) -> QaoaAngles:
    """
    Depth-1 optimum of J(m, m/2, b) from its edge parameters.

    Every edge has both endpoints of degree C(m/2, b)^2 and the same number
    of common neighbors, so one edge group covers the graph.

    Raises:
        DomainError: If b >= m/4.
    """
    if not p.in_formula_range:
        raise DomainError(f"depth-1 Karloff analysis needs b < m/4, got {p.label}")
    d = karloff_degree(p)
    if d == 0:
        raise DomainError(f"{p.label} has no edges")
    group = EdgeGroup(d - 1, d - 1, karloff_common_neighbors(p), karloff_edge_count(p))
    return grid_search(group, spec)


def karloff_f1_ratio(p: KarloffParams, spec: GridSpec | None = None) -> float:
    """
    Instance-specific depth-1 ratio of J(m, m/2, b).

    Triangle-free instances (no common neighbors on an edge) use the closed
    form; the rest are grid searched.

    Raises:
        DomainError: If b >= m/4.
    """
    if not p.in_formula_range:
        raise DomainError(f"depth-1 Karloff analysis needs b < m/4, got {p.label}")
    if karloff_common_neighbors(p) == 0:
        return karloff_triangle_free_ratio(p)
    return karloff_f1(p, spec).value / float(karloff_maxcut(p))

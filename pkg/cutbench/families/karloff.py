"""
Karloff graphs J(m, m/2, b) and their closed forms.

Vertices are the (m/2)-subsets of ``range(m)``, numbered by lexicographic
rank of their sorted element lists; two subsets are adjacent when they
share exactly ``b`` elements.
"""
from __future__ import annotations

import logging
import math
from fractions import Fraction
from functools import cache

import numpy as np
from scipy.optimize import minimize_scalar

from cutbench.core.errors import BudgetExceededError, DomainError
from cutbench.core.math import binom, checked_int, lex_subsets, subset_rank, subset_unrank
from cutbench.core.models import Graph, KarloffParams

logger = logging.getLogger("cutbench.families")

DEFAULT_VERTEX_BUDGET = 10_000


def _require_formula_range(p: KarloffParams, what: str) -> None:
    if not p.in_formula_range:
        raise DomainError(
            f"{what} is unproven outside 0 <= b < m/4, got {p.label} (b/m = {float(p.r):.4f})"
        )


def karloff_vertex_count(p: KarloffParams) -> int:
    """n = C(m, m/2)."""
    return binom(p.m, p.half)


def karloff_degree(p: KarloffParams, *, max_bits: int | None = None) -> int:
    """
    Vertex degree C(m/2, b)^2 in exact integer arithmetic.

    Args:
        p: Family parameters.
        max_bits: Optional signed width limit (64 for int64 callers);
            ``None`` keeps arbitrary precision.

    Raises:
        OverflowError: When the degree needs more than ``max_bits`` bits.
    """
    return checked_int(binom(p.half, p.b) ** 2, max_bits=max_bits, what=f"degree of {p.label}")


def karloff_edge_count(p: KarloffParams) -> int:
    """|E| = n * degree / 2."""
    return karloff_vertex_count(p) * karloff_degree(p) // 2


def karloff_common_neighbors(p: KarloffParams) -> int:
    """
    Common neighbors of any edge of J(m, m/2, b).

    Counts subsets U with |U & S| = |U & T| = b for a fixed pair S, T with
    |S & T| = b, split by how many of U's elements lie in S & T.
    """
    t, b = p.half, p.b
    return sum(
        binom(b, k) * binom(t - b, b - k) ** 2 * binom(b, t - 2 * b + k) for k in range(b + 1)
    )


def karloff_subset(p: KarloffParams, vertex: int) -> tuple[int, ...]:
    """The (m/2)-subset represented by a vertex index."""
    return subset_unrank(vertex, p.m, p.half)


def karloff_vertex_index(p: KarloffParams, subset: tuple[int, ...] | list[int]) -> int:
    """Vertex index of an (m/2)-subset of ``range(m)``."""
    if len(subset) != p.half:
        raise ValueError(f"subset must have {p.half} elements, got {len(subset)}")
    return subset_rank(subset, p.m)


def membership_matrix(p: KarloffParams) -> np.ndarray:
    """0/1 matrix with row i the indicator of the i-th subset."""
    n = karloff_vertex_count(p)
    mat = np.zeros((n, p.m), dtype=np.int16)
    for i, subset in enumerate(lex_subsets(p.m, p.half)):
        mat[i, list(subset)] = 1
    return mat


def karloff_generate(p: KarloffParams, vertex_budget: int = DEFAULT_VERTEX_BUDGET) -> Graph:
    """
    Build the unit-weight graph J(m, m/2, b).

    Args:
        p: Family parameters; any 0 <= b <= m/2 is accepted.
        vertex_budget: Largest C(m, m/2) allowed.

    Returns:
        The graph, with edges sorted by (u, v). b = m/2 yields the edgeless
        graph since only a subset itself shares m/2 elements with it.

    Raises:
        BudgetExceededError: If C(m, m/2) exceeds ``vertex_budget``.
    """
    n = karloff_vertex_count(p)
    if n > vertex_budget:
        raise BudgetExceededError(f"{p.label} has {n} vertices, budget is {vertex_budget}")
    if p.is_trivial:
        logger.debug("%s is trivial (perfect matching)", p.label)
    elif not p.in_formula_range:
        logger.warning("%s has b >= m/4; ratio and Max-Cut formulas do not apply", p.label)
    mat = membership_matrix(p)
    overlap = mat @ mat.T
    pairs = np.argwhere(np.triu(overlap == p.b, k=1))
    g = Graph(n=n, edges=tuple((int(u), int(v), 1.0) for u, v in pairs))
    logger.debug("Generated %s: n=%d, |E|=%d", p.label, g.n, g.num_edges)
    return g


def karloff_maxcut(p: KarloffParams) -> Fraction:
    """
    Exact Max-Cut (n/2) * C(m/2, b)^2 * (1 - 2b/m).

    Raises:
        DomainError: If b >= m/4.
    """
    _require_formula_range(p, "the Max-Cut formula")
    n = karloff_vertex_count(p)
    return Fraction(n, 2) * karloff_degree(p) * (1 - 2 * p.r)


def karloff_min_eigenvalue(p: KarloffParams) -> Fraction:
    """
    Smallest adjacency eigenvalue C(m/2, b)^2 * (4b/m - 1).

    Raises:
        DomainError: If b >= m/4.
    """
    _require_formula_range(p, "the minimum-eigenvalue formula")
    return karloff_degree(p) * (4 * p.r - 1)


def karloff_theta(p: KarloffParams) -> float:
    """Edge angle arccos(4b/m - 1) of the optimal SDP embedding."""
    return math.acos(float(4 * p.r - 1))


def karloff_gw_ratio(p: KarloffParams) -> float:
    """
    GW instance-specific ratio (theta / pi) / (1 - 2b/m).

    Returns exactly 1.0 for b = 0.

    Raises:
        DomainError: If b >= m/4.
    """
    _require_formula_range(p, "the GW ratio formula")
    if p.is_trivial:
        return 1.0
    theta = karloff_theta(p)
    logger.debug("%s: theta=%.10f", p.label, theta)
    return (theta / math.pi) / float(1 - 2 * p.r)


def _gw_objective(theta: float) -> float:
    return (2 / math.pi) * theta / (1 - math.cos(theta))


@cache
def minimize_theta() -> tuple[float, float]:
    """
    Worst-case GW angle and constant.

    Returns:
        ``(theta*, alpha*)`` where theta* minimizes (2/pi) theta / (1 - cos theta)
        on (0, pi], located by bounded Brent search to 1e-10.
    """
    res = minimize_scalar(
        _gw_objective, bounds=(1e-3, math.pi), method="bounded", options={"xatol": 1e-10}
    )
    theta = float(res.x)
    return theta, _gw_objective(theta)


def alpha_star() -> float:
    """The GW worst-case constant, about 0.87856."""
    return minimize_theta()[1]


def worst_overlap_ratio() -> float:
    """r* = (cos theta* + 1) / 4, the overlap ratio that realizes alpha*."""
    return (math.cos(minimize_theta()[0]) + 1) / 4


def karloff_worst_b(m: int, *, use_floor: bool = False) -> int:
    """
    Overlap b closest to the worst-case angle for J(m, m/2, b).

    Args:
        m: Even integer >= 12.
        use_floor: Round down instead of up.

    Raises:
        DomainError: If m < 12 or m is odd.
    """
    if m < 12 or m % 2:
        raise DomainError(f"m must be an even integer >= 12, got {m}")
    x = worst_overlap_ratio() * m
    return math.floor(x) if use_floor else math.ceil(x)

"""
Depth-1 QAOA closed forms.

For a unit-weight graph, an edge (u, v) whose endpoints have d_u + 1 and
d_v + 1 neighbors and share lam of them is cut with probability

    ½ + ¼ sin 4β sin γ (cos^d_u γ + cos^d_v γ)
      - ¼ sin² 2β cos^(d_u + d_v - 2 lam) γ (1 - cos^lam 2γ)

under the state e^{-iβB} e^{-iγC} |+>^n with C = Σ (1 - Z_u Z_v) / 2.
Degrees and common-neighbor counts may be arbitrarily large integers.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from cutbench.core.errors import DomainError, IncompatibleOptionsError
from cutbench.core.models import Graph, KarloffParams, QaoaAngles
from cutbench.families.karloff import karloff_degree

_PROB_SLACK = 1e-12
_HUGE_DEGREE = 2**53


@dataclass(frozen=True)
class EdgeGroup:
    """``count`` edges sharing the local parameters (d_u, d_v, lam)."""

    du: int
    dv: int
    lam: int
    count: int | float = 1

    def __post_init__(self) -> None:
        _check_edge_params(self.du, self.dv, self.lam)
        if self.count < 0:
            raise ValueError(f"count must be >= 0, got {self.count}")


def _check_edge_params(du: int, dv: int, lam: int) -> None:
    if du < 0 or dv < 0:
        raise ValueError(f"d_u and d_v must be >= 0, got {du}, {dv}")
    if not 0 <= lam <= min(du, dv):
        raise ValueError(f"lam must be in [0, min(d_u, d_v)] = [0, {min(du, dv)}], got {lam}")


def int_power(x: float | np.ndarray, k: int) -> float | np.ndarray:
    """
    x ** k for a non-negative integer k of any size.

    The sign follows the exact parity of k; the magnitude goes through a
    float exponent, which underflows cleanly to 0.
    """
    if k < 0:
        raise ValueError(f"exponent must be >= 0, got {k}")
    if k == 0:
        return np.ones_like(x) if isinstance(x, np.ndarray) else 1.0
    if k < 2**53:
        return np.power(x, float(k)) if isinstance(x, np.ndarray) else x ** k
    try:
        kf = float(k)
    except OverflowError:
        kf = math.inf
    mag = np.power(np.abs(x), kf)
    if k % 2:
        return np.sign(x) * mag if isinstance(x, np.ndarray) else math.copysign(float(mag), x)
    return mag if isinstance(x, np.ndarray) else float(mag)


def edge_terms(
    gamma: float | np.ndarray, du: int, dv: int, lam: int
) -> tuple[float | np.ndarray, float | np.ndarray]:
    """
    The gamma-dependent factors of the edge probability.

    Returns:
        ``(a, b)`` with probability ½ + ¼ sin 4β · a - ¼ sin² 2β · b.
    """
    c = np.cos(gamma)
    a = np.sin(gamma) * (int_power(c, du) + int_power(c, dv))
    b = int_power(c, du + dv - 2 * lam) * (1 - int_power(np.cos(2 * gamma), lam))
    return a, b


def edge_cut_prob(gamma: float, beta: float, du: int, dv: int, lam: int) -> float:
    """
    Probability that depth-1 QAOA cuts an edge.

    Args:
        gamma: Cost angle.
        beta: Mixer angle.
        du: Degree of u minus one.
        dv: Degree of v minus one.
        lam: Common neighbors of u and v.

    Raises:
        ValueError: If du, dv < 0 or lam is outside [0, min(du, dv)].
    """
    _check_edge_params(du, dv, lam)
    a, b = edge_terms(gamma, du, dv, lam)
    p = 0.5 + 0.25 * math.sin(4 * beta) * float(a) - 0.25 * math.sin(2 * beta) ** 2 * float(b)
    if not -_PROB_SLACK <= p <= 1 + _PROB_SLACK:
        raise ArithmeticError(f"edge probability {p} outside [0, 1] at gamma={gamma}, beta={beta}")
    return p


def expected_cut_param(
    edge_count: int | float, du: int, dv: int, lam: int, gamma: float, beta: float
) -> float:
    """Expected cut of an edge-homogeneous graph: edge_count * edge_cut_prob."""
    return float(edge_count) * edge_cut_prob(gamma, beta, du, dv, lam)


def edge_groups(g: Graph) -> Counter[tuple[int, int, int]]:
    """
    Multiset of local edge parameters (d_u, d_v, lam) with d_u <= d_v.

    d_u and d_v are endpoint degrees minus one.
    """
    nbrs, deg = g.neighbors, g.degrees
    groups: Counter[tuple[int, int, int]] = Counter()
    for u, v, _ in g.edges:
        du, dv = sorted((deg[u] - 1, deg[v] - 1))
        groups[(du, dv, len(nbrs[u] & nbrs[v]))] += 1
    return groups


def groups_for_graph(g: Graph) -> list[EdgeGroup]:
    """Edge groups of a unit-weight graph, sorted by parameters."""
    if not g.is_unit_weight:
        raise IncompatibleOptionsError(
            "the per-edge QAOA formula needs unit weights; use the statevector path"
        )
    return [EdgeGroup(du, dv, lam, count) for (du, dv, lam), count in sorted(edge_groups(g).items())]


def groups_expectation(groups: list[EdgeGroup], gamma: float, beta: float) -> float:
    """Σ count * edge_cut_prob over edge groups."""
    return math.fsum(
        float(grp.count) * edge_cut_prob(gamma, beta, grp.du, grp.dv, grp.lam) for grp in groups
    )


def graph_expectation(g: Graph, gamma: float, beta: float) -> float:
    """F_1(gamma, beta) of a unit-weight graph from the per-edge formula."""
    return groups_expectation(groups_for_graph(g), gamma, beta)


def triangle_free_factor(d: int) -> float:
    """d^(-1/2) ((d-1)/d)^((d-1)/2), evaluated in log space."""
    if d < 1:
        raise DomainError(f"degree must be >= 1, got {d}")
    if d == 1:
        return 1.0
    if d > _HUGE_DEGREE:
        # ((d-1)/d)^((d-1)/2) is e^(-1/2) to double precision here
        return math.exp(-0.5 * math.log(d) - 0.5)
    return math.exp(-0.5 * math.log(d) + ((d - 1) / 2) * math.log1p(-1 / d))


def triangle_free_optimum(d: int, edge_count: int | float) -> float:
    """
    Best depth-1 expected cut of a d-regular triangle-free graph.

    Returns:
        (|E| / 2) (1 + d^(-1/2) ((d-1)/d)^((d-1)/2)).

    Raises:
        DomainError: If d < 1.
    """
    return float(edge_count) / 2 * (1 + triangle_free_factor(d))


def triangle_free_angles(d: int, edge_count: int | float) -> QaoaAngles:
    """Optimal angles gamma = arctan(1/sqrt(d-1)), beta = pi/8 and their value."""
    gamma = math.pi / 2 if d == 1 else math.atan(1 / math.sqrt(d - 1))
    return QaoaAngles(gamma=gamma, beta=math.pi / 8, value=triangle_free_optimum(d, edge_count))


def limiting_ratio(r: float) -> float:
    """
    Large-m depth-1 ratio 1 / (2 - 4r) of Karloff graphs at overlap r = b/m.

    Proven for r < 1/6 (the triangle-free regime); on [1/6, 1/4) it is an
    extrapolation.

    Raises:
        DomainError: If r is outside (0, 1/4).
    """
    if not 0 < r < 0.25:
        raise DomainError(f"r must be in (0, 1/4), got {r}")
    return 1 / (2 - 4 * r)


def karloff_triangle_free_ratio(p: KarloffParams) -> float:
    """
    Closed-form depth-1 ratio of a triangle-free J(m, m/2, b).

    |E| cancels against the Max-Cut |E| (1 - 2b/m), so only the degree enters.
    """
    d = karloff_degree(p)
    return 0.5 * (1 + triangle_free_factor(d)) / float(1 - 2 * p.r)

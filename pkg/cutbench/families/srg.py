"""Strongly regular parameter families and their spectral closed forms."""
from __future__ import annotations

import math
from fractions import Fraction

from cutbench.core.errors import DomainError
from cutbench.core.models import SrgParams


def q3t_params(t: int) -> SrgParams:
    """
    Parameters (4(3t+1), 3(t+1), 2, t+1) of the q3t family.

    Raises:
        ValueError: If t < 1 (t = 0 would be the complete graph K4).
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    return SrgParams(n=4 * (3 * t + 1), k=3 * (t + 1), lam=2, mu=t + 1)


def q3t_maxcut_bound(t: int) -> int:
    """The SDP bound 2|E|/3, an exact integer for every t."""
    s = q3t_params(t)
    return 2 * s.edge_count // 3


def _discriminant(s: SrgParams) -> int:
    disc = (s.lam - s.mu) ** 2 + 4 * (s.k - s.mu)
    if disc < 0:
        raise DomainError(f"SRG{s.as_tuple()} has negative discriminant {disc}; not realizable")
    return disc


def srg_eigenvalues(s: SrgParams) -> tuple[float, float]:
    """
    Non-principal eigenvalues (xi1, xi2) with xi1 >= xi2.

    Raises:
        DomainError: If (lambda - mu)^2 + 4(k - mu) < 0.
    """
    root = math.sqrt(_discriminant(s))
    return ((s.lam - s.mu + root) / 2, (s.lam - s.mu - root) / 2)


def srg_eigenvalues_exact(s: SrgParams) -> tuple[Fraction, Fraction] | None:
    """Rational (xi1, xi2) when the discriminant is a perfect square, else ``None``."""
    disc = _discriminant(s)
    root = math.isqrt(disc)
    if root * root != disc:
        return None
    return (Fraction(s.lam - s.mu + root, 2), Fraction(s.lam - s.mu - root, 2))


def srg_zp_star(s: SrgParams) -> Fraction | float:
    """
    Optimal GW SDP value (|E|/2)(1 - xi2/k) of a primitive SRG.

    Exact when xi2 is rational, a float otherwise.
    """
    exact = srg_eigenvalues_exact(s)
    if exact is not None:
        return Fraction(s.edge_count, 2) * (1 - exact[1] / s.k)
    xi2 = srg_eigenvalues(s)[1]
    return s.edge_count / 2 * (1 - xi2 / s.k)


def q3t_gw_ratio() -> float:
    """(3/2) arccos(-1/3) / pi, the GW ratio of a q3t SRG whose Max-Cut meets its bound."""
    return 1.5 * math.acos(-1 / 3) / math.pi

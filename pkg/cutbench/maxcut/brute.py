"""Exhaustive Max-Cut by Gray-code enumeration."""
from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from typing import Any

from cutbench.core.errors import BudgetExceededError
from cutbench.core.models import CutAssignment, Graph, MaxCutResult, MaxCutStatus
from cutbench.maxcut.base import AbstractMaxCutSolver

logger = logging.getLogger("cutbench.maxcut")

DEFAULT_MAX_VERTICES = 26


def gray_code_cuts(g: Graph) -> Iterator[tuple[int, float]]:
    """
    Walk all 2^(n-1) bipartitions with vertex 0 fixed on side +1.

    Consecutive states differ in one vertex, and the cut value is updated
    from that vertex's neighborhood only.

    Yields:
        ``(mask, value)`` where bit i of mask set means vertex i is on side -1.
    """
    sides = [1] * g.n
    adj = g.adjacency
    mask, value = 0, 0.0
    yield mask, value
    for step in range(1, 1 << max(g.n - 1, 0)):
        v = (step & -step).bit_length()
        s = sides[v]
        # flipping v cuts its same-side edges and uncuts the rest
        value += s * sum(w * sides[u] for u, w in adj[v])
        sides[v] = -s
        mask ^= 1 << v
        yield mask, value


def mask_to_cut(mask: int, n: int) -> CutAssignment:
    """The bipartition encoded by a gray_code_cuts mask."""
    return CutAssignment(sides=tuple(-1 if mask >> i & 1 else 1 for i in range(n)))


def brute_force(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> MaxCutResult:
    """
    Exact Max-Cut over every bipartition.

    Args:
        g: Weighted graph with at most ``max_vertices`` vertices.
        max_vertices: Largest accepted n.

    Returns:
        The first maximum in Gray-code order, status exact.

    Raises:
        BudgetExceededError: If ``g.n`` exceeds ``max_vertices``.
    """
    if g.n > max_vertices:
        raise BudgetExceededError(f"brute force on {g.n} vertices exceeds budget {max_vertices}")
    best_mask, best_value = 0, -float("inf")
    for mask, value in gray_code_cuts(g):
        if value > best_value:
            best_mask, best_value = mask, value
    logger.debug("brute force: %d states, best %.6f", 1 << max(g.n - 1, 0), best_value)
    return MaxCutResult(
        best_cut=mask_to_cut(best_mask, g.n),
        value=best_value,
        status=MaxCutStatus.EXACT,
        upper_bound=best_value,
        solver="brute",
    )


@dataclass
class BruteForceConfig:
    """Configuration for the exhaustive solver."""

    max_vertices: int = DEFAULT_MAX_VERTICES

    def validate(self) -> None:
        """Validate the vertex budget."""
        if not 1 <= self.max_vertices <= 40:
            raise ValueError(f"max_vertices must be in [1, 40], got {self.max_vertices}")


class BruteForceSolver(AbstractMaxCutSolver):
    """Exhaustive enumeration for graphs up to a few dozen vertices."""

    def __init__(self, config: BruteForceConfig | None = None) -> None:
        """
        Initialize the solver.

        Args:
            config: Solver configuration. Defaults to a 26-vertex budget.
        """
        self.config = config or BruteForceConfig()

    @property
    def name(self) -> str:
        """Solver identifier."""
        return "brute"

    @property
    def description(self) -> str:
        """Solver description."""
        return "Exact Max-Cut by Gray-code enumeration of 2^(n-1) bipartitions"

    def validate_config(self) -> None:
        """Validate the solver configuration."""
        self.config.validate()

    def solve(self, g: Graph) -> MaxCutResult:
        """Enumerate every bipartition of ``g``."""
        self.validate_config()
        return brute_force(g, self.config.max_vertices)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> BruteForceSolver:
        """Build from a plain dict of config values."""
        return cls(BruteForceConfig(**data))

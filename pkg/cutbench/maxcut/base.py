"""Abstract Max-Cut solver interface."""
from __future__ import annotations

from abc import ABC, abstractmethod

from cutbench.core.models import Graph, MaxCutResult


class AbstractMaxCutSolver(ABC):
    """
    Max-Cut solver interface.

    ``solve`` must be deterministic for the same graph and configuration,
    and the returned value must equal ``cut_value(g, result.best_cut)``.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Solver name, e.g. 'brute'."""

    @property
    @abstractmethod
    def description(self) -> str:
        """One-line description of the solver."""

    @abstractmethod
    def solve(self, g: Graph) -> MaxCutResult:
        """
        Find a maximum (or good) cut.

        Args:
            g: Weighted graph.

        Returns:
            MaxCutResult with the best cut found and its status.
        """

    def validate_config(self) -> None:  # noqa: B027
        """Validate solver config. Raise ValueError if invalid."""

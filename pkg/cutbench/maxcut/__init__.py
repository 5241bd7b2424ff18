"""Max-Cut solver registry and exports."""
from __future__ import annotations

from typing import Any

from cutbench.maxcut.base import AbstractMaxCutSolver
from cutbench.maxcut.brute import BruteForceSolver, brute_force, gray_code_cuts, mask_to_cut
from cutbench.maxcut.certify import certify, integral_bound
from cutbench.maxcut.tabu import TabuSolver, local_search

SOLVERS: dict[str, type[AbstractMaxCutSolver]] = {
    "brute": BruteForceSolver,
    "tabu": TabuSolver,
}

__all__ = [
    "AbstractMaxCutSolver",
    "BruteForceSolver",
    "TabuSolver",
    "SOLVERS",
    "brute_force",
    "certify",
    "get_solver",
    "gray_code_cuts",
    "integral_bound",
    "local_search",
    "mask_to_cut",
]


def get_solver(name: str, params: dict[str, Any] | None = None) -> AbstractMaxCutSolver:
    """
    Get a Max-Cut solver by name.

    Args:
        name: Solver name ('brute', 'tabu').
        params: Optional solver configuration values.

    Returns:
        Configured solver instance.

    Raises:
        ValueError: If the solver name is unknown.
    """
    if name not in SOLVERS:
        raise ValueError(f"Unknown solver: {name!r}. Available: {list(SOLVERS)}")
    cls = SOLVERS[name]
    if params and hasattr(cls, "from_dict"):
        return cls.from_dict(params)  # type: ignore[attr-defined]
    return cls()

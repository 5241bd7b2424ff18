"""
Multi-start tabu search for Max-Cut.

Each restart starts from a random bipartition and repeatedly makes the
best single-vertex flip. Recently flipped vertices are tabu for
``tabu_tenure`` moves unless flipping one beats the restart's best cut.
A restart ends after ``max_stall`` moves without improving its best.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

import numpy as np

from cutbench.core.config import LocalSearchConfig
from cutbench.core.models import CutAssignment, Graph, MaxCutResult, MaxCutStatus
from cutbench.core.rng import DEFAULT_SEED, make_rng
from cutbench.graphs.queries import cut_value
from cutbench.maxcut.base import AbstractMaxCutSolver

logger = logging.getLogger("cutbench.maxcut")


@dataclass
class _Restart:
    sides: np.ndarray
    value: float
    moves: int


def _run_restart(
    a: np.ndarray,
    sides: np.ndarray,
    order: np.ndarray,
    tenure: int,
    max_stall: int,
) -> _Restart:
    n = len(sides)
    s = sides.astype(np.float64)
    gain = s * (a @ s)
    # value relative to the start; the caller rebases it with cut_value
    value = 0.0
    best_value, best_s = 0.0, s.copy()
    tabu_until = np.zeros(n, dtype=np.int64)
    stall = moves = 0
    while stall <= max_stall:
        gains = gain[order]
        allowed = (tabu_until[order] <= moves) | (value + gains > best_value + 1e-12)
        if not allowed.any():
            break
        masked = np.where(allowed, gains, -np.inf)
        pick = int(order[int(np.argmax(masked))])
        delta = gain[pick]
        s[pick] = -s[pick]
        gain += 2.0 * a[pick] * s * s[pick]
        gain[pick] = -delta
        value += delta
        moves += 1
        tabu_until[pick] = moves + tenure
        if value > best_value + 1e-12:
            best_value, best_s = value, s.copy()
            stall = 0
        else:
            stall += 1
    return _Restart(sides=best_s.astype(np.int8), value=best_value, moves=moves)


def local_search(
    g: Graph,
    restarts: int = 100,
    seed: int = DEFAULT_SEED,
    *,
    tabu_tenure: int = 10,
    max_stall: int | None = None,
) -> MaxCutResult:
    """
    Best cut over ``restarts`` independent tabu-search runs.

    Restart r draws its start sides and its vertex order from one seeded
    stream, in restart order, so the outcome depends only on ``seed``.
    Among equal values the lowest restart index wins.

    Args:
        g: Weighted graph.
        restarts: Number of random starts.
        seed: PRNG seed.
        tabu_tenure: Moves a flipped vertex stays tabu.
        max_stall: Non-improving moves tolerated; ``None`` selects 2n.

    Returns:
        MaxCutResult with status heuristic.
    """
    cfg = LocalSearchConfig(
        restarts=restarts, tabu_tenure=tabu_tenure, max_stall=max_stall, seed=seed
    )
    cfg.validate()
    stall_limit = 2 * g.n if max_stall is None else max_stall
    a = g.adjacency_matrix()
    rng = make_rng(seed)

    best: tuple[np.ndarray, float, int] | None = None
    total_moves = 0
    for r in range(restarts):
        start = rng.integers(0, 2, size=g.n).astype(np.int8) * 2 - 1
        order = rng.permutation(g.n)
        run = _run_restart(a, start, order, tabu_tenure, stall_limit)
        total_moves += run.moves
        value = cut_value(g, run.sides)
        if best is None or value > best[1]:
            best = (run.sides, value, r)
    assert best is not None
    logger.debug(
        "tabu search: %d restarts, %d moves, best %.6f at restart %d",
        restarts, total_moves, best[1], best[2],
    )
    return MaxCutResult(
        best_cut=CutAssignment.from_array(best[0]),
        value=best[1],
        status=MaxCutStatus.HEURISTIC,
        solver="tabu",
        metadata={"restarts": restarts, "best_restart": best[2], "moves": total_moves},
    )


class TabuSolver(AbstractMaxCutSolver):
    """Multi-start tabu search; fast, but gives no optimality guarantee."""

    def __init__(self, config: LocalSearchConfig | None = None) -> None:
        """
        Initialize the solver.

        Args:
            config: Search configuration. Defaults to 100 restarts, tenure 10.
        """
        self.config = config or LocalSearchConfig()

    @property
    def name(self) -> str:
        """Solver identifier."""
        return "tabu"

    @property
    def description(self) -> str:
        """Solver description."""
        return "Multi-start steepest-ascent single-flip tabu search"

    def validate_config(self) -> None:
        """Validate the search configuration."""
        self.config.validate()

    def solve(self, g: Graph) -> MaxCutResult:
        """Run the configured restarts on ``g``."""
        self.validate_config()
        return local_search(
            g,
            self.config.restarts,
            self.config.seed,
            tabu_tenure=self.config.tabu_tenure,
            max_stall=self.config.max_stall,
        )

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> TabuSolver:
        """Build from a plain dict of config values."""
        return cls(LocalSearchConfig.from_dict(data))

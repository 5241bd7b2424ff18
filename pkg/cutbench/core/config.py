"""Tunable settings for cutbench analyses."""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field, fields
from typing import Any

from cutbench.core.rng import DEFAULT_SEED

_GRID_RE = re.compile(r"^\s*(\d+)\s*[xX]\s*(\d+)\s*$")


def _known_keys(cls: type, data: dict[str, Any]) -> dict[str, Any]:
    names = {f.name for f in fields(cls)}
    unknown = set(data) - names
    if unknown:
        raise ValueError(f"unknown {cls.__name__} keys: {sorted(unknown)}")
    return dict(data)


@dataclass
class Budgets:
    """Size limits beyond which an analysis refuses to run."""

    vertex_budget: int = 10_000
    """Largest instance karloff_generate will build."""

    dense_eigen_budget: int = 2048
    """Largest matrix handed to the dense eigensolver."""

    bm_budget: int = 2000
    """Largest graph bm_solve accepts."""

    statevector_qubits: int = 24
    """Largest graph the statevector simulator accepts."""

    brute_force_vertices: int = 26
    """Largest graph brute_force enumerates."""

    def validate(self) -> None:
        """Validate every budget is positive."""
        for f in fields(self):
            value = getattr(self, f.name)
            if value < 1:
                raise ValueError(f"{f.name} must be >= 1, got {value}")

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Budgets:
        """Build from a plain dict, rejecting unknown keys."""
        cfg = cls(**_known_keys(cls, data))
        cfg.validate()
        return cfg


@dataclass
class BMOptions:
    """Options for the low-rank SDP solver."""

    seed: int = DEFAULT_SEED
    rank: int | None = None
    """Factor width; ``None`` selects ceil(sqrt(2n)) + 1."""

    max_iter: int = 50_000
    grad_tol: float = 1e-7
    """Stop when the Riemannian gradient norm is below grad_tol * sum|w|."""

    armijo: float = 1e-4
    gap_tol: float | None = None
    """Absolute duality-gap tolerance; ``None`` selects 1e-4 * max(1, zP)."""

    psd_tol: float | None = None
    """PSD slack tolerance; ``None`` selects 1e-7 * ||A_w||_inf."""

    restarts: int = 1

    def validate(self) -> None:
        """Validate solver options."""
        if self.seed < 0:
            raise ValueError(f"seed must be >= 0, got {self.seed}")
        if self.rank is not None and self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")
        if self.max_iter < 1:
            raise ValueError(f"max_iter must be >= 1, got {self.max_iter}")
        if not self.grad_tol > 0:
            raise ValueError(f"grad_tol must be > 0, got {self.grad_tol}")
        if not 0 < self.armijo < 1:
            raise ValueError(f"armijo must be in (0, 1), got {self.armijo}")
        if self.gap_tol is not None and not self.gap_tol > 0:
            raise ValueError(f"gap_tol must be > 0, got {self.gap_tol}")
        if self.psd_tol is not None and not self.psd_tol > 0:
            raise ValueError(f"psd_tol must be > 0, got {self.psd_tol}")
        if self.restarts < 0:
            raise ValueError(f"restarts must be >= 0, got {self.restarts}")

    def rank_for(self, n: int) -> int:
        """Factor width used for an n-vertex graph."""
        if self.rank is not None:
            return self.rank
        return math.ceil(math.sqrt(2 * n)) + 1

    def gap_tol_for(self, primal: float) -> float:
        """Absolute gap tolerance at the given primal value."""
        if self.gap_tol is not None:
            return self.gap_tol
        return 1e-4 * max(1.0, abs(primal))

    def psd_tol_for(self, norm_inf: float) -> float:
        """PSD slack tolerance for a matrix with the given infinity norm."""
        if self.psd_tol is not None:
            return self.psd_tol
        return 1e-7 * max(1.0, norm_inf)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> BMOptions:
        """Build from a plain dict, rejecting unknown keys."""
        cfg = cls(**_known_keys(cls, data))
        cfg.validate()
        return cfg


@dataclass(frozen=True)
class GridSpec:
    """
    Uniform QAOA angle grid.

    Points are ``gamma_i = gamma_lo + i * (gamma_hi - gamma_lo) / G`` for
    ``i < G`` and likewise for beta, so the upper bounds are excluded.
    """

    gamma_points: int = 1000
    beta_points: int = 1000
    gamma_bounds: tuple[float, float] = (-math.pi / 2, math.pi / 2)
    beta_bounds: tuple[float, float] = (-math.pi / 4, math.pi / 4)

    def __post_init__(self) -> None:
        self.validate()

    def validate(self) -> None:
        """Validate point counts and bounds."""
        if self.gamma_points < 2:
            raise ValueError(f"gamma_points must be >= 2, got {self.gamma_points}")
        if self.beta_points < 2:
            raise ValueError(f"beta_points must be >= 2, got {self.beta_points}")
        for name, (lo, hi) in (("gamma_bounds", self.gamma_bounds), ("beta_bounds", self.beta_bounds)):
            if not lo < hi:
                raise ValueError(f"{name} must satisfy lo < hi, got ({lo}, {hi})")

    @property
    def label(self) -> str:
        """``GxB`` form used in provenance lines."""
        return f"{self.gamma_points}x{self.beta_points}"

    def gammas(self) -> list[float]:
        """Grid gamma values in index order."""
        lo, hi = self.gamma_bounds
        step = (hi - lo) / self.gamma_points
        return [lo + i * step for i in range(self.gamma_points)]

    def betas(self) -> list[float]:
        """Grid beta values in index order."""
        lo, hi = self.beta_bounds
        step = (hi - lo) / self.beta_points
        return [lo + j * step for j in range(self.beta_points)]

    @classmethod
    def fine(cls) -> GridSpec:
        """The 5000 x 5000 grid."""
        return cls(gamma_points=5000, beta_points=5000)

    @classmethod
    def parse(cls, text: str) -> GridSpec:
        """
        Parse a ``GxB`` string such as ``1000x1000``.

        Raises:
            ValueError: If the text is not two positive integers joined by ``x``.
        """
        match = _GRID_RE.match(text)
        if not match:
            raise ValueError(f"grid must look like GxB (e.g. 1000x1000), got {text!r}")
        return cls(gamma_points=int(match.group(1)), beta_points=int(match.group(2)))


@dataclass
class LocalSearchConfig:
    """Configuration for the multi-start tabu search."""

    restarts: int = 100
    tabu_tenure: int = 10
    max_stall: int | None = None
    """Non-improving moves tolerated per restart; ``None`` selects 2n."""

    seed: int = DEFAULT_SEED

    def validate(self) -> None:
        """Validate search parameters."""
        if self.restarts < 1:
            raise ValueError(f"restarts must be >= 1, got {self.restarts}")
        if self.tabu_tenure < 0:
            raise ValueError(f"tabu_tenure must be >= 0, got {self.tabu_tenure}")
        if self.max_stall is not None and self.max_stall < 0:
            raise ValueError(f"max_stall must be >= 0, got {self.max_stall}")
        if self.seed < 0:
            raise ValueError(f"seed must be >= 0, got {self.seed}")

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> LocalSearchConfig:
        """Build from a plain dict, rejecting unknown keys."""
        cfg = cls(**_known_keys(cls, data))
        cfg.validate()
        return cfg


ANALYSES: tuple[str, ...] = (
    "gw-analytic",
    "gw-bm",
    "qaoa-grid",
    "qaoa-statevector",
    "maxcut-brute",
    "maxcut-tabu",
    "certify",
)


@dataclass
class AnalysisConfig:
    """What the Analyzer runs on one instance, and with which settings."""

    analyses: tuple[str, ...] = ("gw-analytic", "qaoa-grid", "maxcut-brute", "certify")
    seed: int = DEFAULT_SEED
    grid: GridSpec = field(default_factory=GridSpec)
    budgets: Budgets = field(default_factory=Budgets)
    bm: BMOptions = field(default_factory=BMOptions)
    local_search: LocalSearchConfig = field(default_factory=LocalSearchConfig)
    rounding_samples: int = 0
    """Monte Carlo roundings added to the GW analysis; 0 disables."""

    def validate(self) -> None:
        """Validate the analysis list and nested configs."""
        unknown = [a for a in self.analyses if a not in ANALYSES]
        if unknown:
            raise ValueError(f"analyses must be drawn from {list(ANALYSES)}, got {unknown}")
        if self.seed < 0:
            raise ValueError(f"seed must be >= 0, got {self.seed}")
        if self.rounding_samples < 0:
            raise ValueError(f"rounding_samples must be >= 0, got {self.rounding_samples}")
        self.grid.validate()
        self.budgets.validate()
        self.bm.validate()
        self.local_search.validate()

    def wants(self, analysis: str) -> bool:
        """True when the named analysis is enabled."""
        return analysis in self.analyses

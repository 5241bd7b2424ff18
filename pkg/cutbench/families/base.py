"""Instance family interface used by ``cutbench gen``."""
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any

from cutbench.core.errors import DomainError, IncompatibleOptionsError
from cutbench.core.models import Graph, KarloffParams
from cutbench.families.karloff import DEFAULT_VERTEX_BUDGET, karloff_generate
from cutbench.families.perturb import perturb_weights
from cutbench.reports.schemas import InstanceMeta


def _tool_version() -> str:
    from cutbench import __version__

    return __version__


class AbstractFamily(ABC):
    """
    A generator of Max-Cut instances.

    ``generate`` must be deterministic for the same configuration (and
    source graph, where one is needed).
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Family name, e.g. 'karloff'."""

    @property
    @abstractmethod
    def description(self) -> str:
        """One-line description of the family."""

    @abstractmethod
    def generate(self, source: Graph | None = None) -> Graph:
        """
        Build an instance.

        Args:
            source: Input graph for families that transform an existing
                instance; ignored otherwise.
        """

    @abstractmethod
    def meta(self, g: Graph) -> InstanceMeta:
        """Provenance record for a generated instance."""

    def validate_config(self) -> None:  # noqa: B027
        """Validate family config. Raise ValueError if invalid."""


@dataclass
class KarloffFamilyConfig:
    """Configuration for the Karloff family."""

    m: int = 6
    b: int = 1
    force: bool = False
    """Generate even when b >= m/4, where the closed forms do not apply."""

    vertex_budget: int = DEFAULT_VERTEX_BUDGET

    def validate(self) -> None:
        """Validate parameters against the family's domain."""
        p = KarloffParams(m=self.m, b=self.b)
        if not p.in_formula_range and not self.force:
            raise DomainError(
                f"b={self.b} >= m/4 for m={self.m}: ratio formulas do not apply "
                "(use force to generate anyway)"
            )
        if self.vertex_budget < 1:
            raise ValueError(f"vertex_budget must be >= 1, got {self.vertex_budget}")


class KarloffFamily(AbstractFamily):
    """J(m, m/2, b): half-size subsets adjacent when they share b elements."""

    def __init__(self, config: KarloffFamilyConfig | None = None) -> None:
        """
        Initialize the family.

        Args:
            config: Family configuration. Defaults to J(6,3,1).
        """
        self.config = config or KarloffFamilyConfig()

    @property
    def name(self) -> str:
        """Family identifier."""
        return "karloff"

    @property
    def description(self) -> str:
        """Family description."""
        return "Karloff graphs J(m, m/2, b), tight instances for GW rounding"

    @property
    def params(self) -> KarloffParams:
        """The (m, b) pair."""
        return KarloffParams(m=self.config.m, b=self.config.b)

    def validate_config(self) -> None:
        """Validate the family configuration."""
        self.config.validate()

    def generate(self, source: Graph | None = None) -> Graph:
        """Build J(m, m/2, b)."""
        self.validate_config()
        return karloff_generate(self.params, vertex_budget=self.config.vertex_budget)

    def meta(self, g: Graph) -> InstanceMeta:
        """Provenance with m and b."""
        return InstanceMeta(
            family=self.name,
            params={"m": str(self.config.m), "b": str(self.config.b)},
            n=g.n,
            edges=g.num_edges,
            tool_version=_tool_version(),
        )

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> KarloffFamily:
        """Build from a plain dict of config values."""
        return cls(KarloffFamilyConfig(**data))


@dataclass
class PerturbFamilyConfig:
    """Configuration for the perturbed-weight family."""

    sigma: float = 0.1
    seed: int = 0
    source_label: str = ""
    """Name of the input instance, recorded in the sidecar."""

    def validate(self) -> None:
        """Validate sigma and seed."""
        if not self.sigma >= 0:
            raise ValueError(f"sigma must be >= 0, got {self.sigma}")
        if self.seed < 0:
            raise ValueError(f"seed must be >= 0, got {self.seed}")


class PerturbFamily(AbstractFamily):
    """An existing topology with weights redrawn as 1 + sigma * N(0, 1)."""

    def __init__(self, config: PerturbFamilyConfig | None = None) -> None:
        """
        Initialize the family.

        Args:
            config: Perturbation settings.
        """
        self.config = config or PerturbFamilyConfig()

    @property
    def name(self) -> str:
        """Family identifier."""
        return "perturb"

    @property
    def description(self) -> str:
        """Family description."""
        return "Gaussian edge-weight perturbation of an input instance"

    def validate_config(self) -> None:
        """Validate the family configuration."""
        self.config.validate()

    def generate(self, source: Graph | None = None) -> Graph:
        """Perturb the weights of ``source``."""
        self.validate_config()
        if source is None:
            raise IncompatibleOptionsError("the perturb family needs a source instance")
        return perturb_weights(source, self.config.sigma, self.config.seed)

    def meta(self, g: Graph) -> InstanceMeta:
        """Provenance with sigma, seed and source."""
        return InstanceMeta(
            family=self.name,
            seed=self.config.seed,
            sigma=self.config.sigma,
            source=self.config.source_label or None,
            n=g.n,
            edges=g.num_edges,
            tool_version=_tool_version(),
        )

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> PerturbFamily:
        """Build from a plain dict of config values."""
        return cls(PerturbFamilyConfig(**data))

"""Exception hierarchy for cutbench.

Every error derives from ``ValueError`` so callers that guard argument
validation with ``except ValueError`` keep working.
"""
from __future__ import annotations


class CutbenchError(ValueError):
    """Base class for all cutbench errors."""


class GraphParseError(CutbenchError):
    """Malformed instance file (edge list or graph6)."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DomainError(CutbenchError):
    """Arguments outside the range where a formula or operation is defined."""


class BudgetExceededError(CutbenchError):
    """Instance larger than the configured vertex / dimension / qubit budget."""


class SpectralError(CutbenchError):
    """Eigen-decomposition failure or degenerate eigenspace."""


class CertificationError(CutbenchError):
    """A cut exceeds its claimed upper bound (signals an upstream bug)."""


class IncompatibleOptionsError(CutbenchError):
    """Requested analyses cannot run on the given instance."""

"""QAOA report fragment: depth-1 optimum, its angles and the ratio."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from cutbench.core.errors import DomainError
from cutbench.core.models import QaoaAngles


@dataclass
class QaoaReport:
    """Depth-1 QAOA outcome for one instance."""

    angles: QaoaAngles
    maxcut: float | None = None
    method: str = "grid"
    """'grid', 'closed-form' or 'statevector'."""

    @property
    def f1(self) -> float:
        """Best expected cut F_1."""
        return self.angles.value

    @property
    def ratio(self) -> float | None:
        """F_1 / Max-Cut, when Max-Cut is known."""
        return None if self.maxcut is None else self.f1 / self.maxcut


def qaoa_report(
    angles: QaoaAngles,
    maxcut: float | Fraction | None = None,
    *,
    method: str = "grid",
) -> QaoaReport:
    """
    Package a depth-1 optimum with the Max-Cut it is measured against.

    Raises:
        DomainError: If ``maxcut`` is 0.
    """
    if maxcut is not None and maxcut == 0:
        raise DomainError("Max-Cut value is 0; ratio undefined")
    return QaoaReport(
        angles=angles,
        maxcut=None if maxcut is None else float(maxcut),
        method=method,
    )

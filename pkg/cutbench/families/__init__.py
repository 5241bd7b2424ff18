"""Instance family registry and exports for cutbench."""
from __future__ import annotations

from typing import Any

from cutbench.families.base import AbstractFamily, KarloffFamily, PerturbFamily

FAMILIES: dict[str, type[AbstractFamily]] = {
    "karloff": KarloffFamily,
    "perturb": PerturbFamily,
}

__all__ = [
    "AbstractFamily",
    "KarloffFamily",
    "PerturbFamily",
    "FAMILIES",
    "get_family",
]


def get_family(name: str, params: dict[str, Any] | None = None) -> AbstractFamily:
    """
    Get an instance family by name.

    Args:
        name: Family name ('karloff', 'perturb').
        params: Optional family configuration values.

    Returns:
        Configured family instance.

    Raises:
        ValueError: If the family name is unknown.
    """
    if name not in FAMILIES:
        raise ValueError(f"Unknown family: {name!r}. Available: {list(FAMILIES)}")
    cls = FAMILIES[name]
    if params and hasattr(cls, "from_dict"):
        return cls.from_dict(params)  # type: ignore[attr-defined]
    return cls()

"""Symmetric eigen-decomposition utilities."""
from cutbench.spectral.eigen import (
    Spectrum,
    distinct_eigenvalues,
    eigenspace_embedding,
    min_eigenvalue,
    symmetric_eigen,
)

__all__ = [
    "Spectrum",
    "distinct_eigenvalues",
    "eigenspace_embedding",
    "min_eigenvalue",
    "symmetric_eigen",
]

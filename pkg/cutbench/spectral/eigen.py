"""
Symmetric eigen-decomposition and eigenspace embeddings.

The default dense path is LAPACK through ``numpy.linalg.eigh``. A cyclic
Jacobi solver is available as ``method="jacobi"``; it is single-threaded and
fully deterministic, which makes it the reference for golden tests. Above
the dense budget only the smallest eigenvalue is available, via ARPACK.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import ArpackError, ArpackNoConvergence, eigsh

from cutbench.core.errors import BudgetExceededError, SpectralError
from cutbench.core.models import Embedding

logger = logging.getLogger("cutbench.spectral")

DEFAULT_DENSE_BUDGET = 2048
JACOBI_MAX_SWEEPS = 100

EigenMethod = Literal["lapack", "jacobi"]


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues in ascending order with matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def n(self) -> int:
        """Matrix dimension."""
        return int(self.eigenvalues.shape[0])

    def residual(self, a: np.ndarray) -> float:
        """max_i ||A v_i - lambda_i v_i||_inf."""
        r = a @ self.eigenvectors - self.eigenvectors * self.eigenvalues
        return float(np.max(np.abs(r))) if r.size else 0.0

    def reconstruct(self) -> np.ndarray:
        """Sum of lambda_i v_i v_i^T."""
        return (self.eigenvectors * self.eigenvalues) @ self.eigenvectors.T


def inf_norm(a: np.ndarray) -> float:
    """Maximum absolute row sum."""
    if sp.issparse(a):
        return float(abs(a).sum(axis=1).max()) if a.shape[0] else 0.0
    return float(np.max(np.sum(np.abs(a), axis=1))) if a.size else 0.0


def default_tol(a: np.ndarray) -> float:
    """1e-10 * n * ||A||_inf, floored at 1e-10 * n for the zero matrix."""
    n = a.shape[0]
    return 1e-10 * max(n, 1) * max(inf_norm(a), 1.0)


def _as_square(a: np.ndarray) -> np.ndarray:
    arr = np.asarray(a, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise SpectralError(f"matrix must be square, got shape {arr.shape}")
    return arr


def _check_symmetric(a: np.ndarray, tol: float) -> None:
    asym = float(np.max(np.abs(a - a.T))) if a.size else 0.0
    if asym > tol:
        raise SpectralError(f"matrix is not symmetric: max |A - A^T| = {asym:.3e} > {tol:.3e}")


def _jacobi(a: np.ndarray, tol: float) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi rotations; returns (diagonal, accumulated rotations)."""
    a = a.copy()
    n = a.shape[0]
    v = np.eye(n)
    for sweep in range(JACOBI_MAX_SWEEPS):
        off = math.sqrt(max(float(np.sum(a * a) - np.sum(np.diag(a) ** 2)), 0.0))
        if off <= tol:
            logger.debug("Jacobi converged after %d sweeps (off=%.3e)", sweep, off)
            return np.diag(a).copy(), v
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                vec_p, vec_q = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q
    raise SpectralError(f"Jacobi did not converge within {JACOBI_MAX_SWEEPS} sweeps")


def symmetric_eigen(
    a: np.ndarray,
    tol: float | None = None,
    *,
    method: EigenMethod = "lapack",
    budget: int = DEFAULT_DENSE_BUDGET,
) -> Spectrum:
    """
    Full spectrum of a dense real symmetric matrix.

    Args:
        a: Square symmetric matrix.
        tol: Symmetry and residual tolerance; default 1e-10 * n * ||A||_inf.
        method: ``"lapack"`` (numpy) or ``"jacobi"`` (deterministic reference).
        budget: Largest accepted dimension.

    Returns:
        Spectrum with ascending eigenvalues.

    Raises:
        BudgetExceededError: If the dimension exceeds ``budget``.
        SpectralError: On asymmetry, non-convergence, or a residual above tol.
    """
    arr = _as_square(a)
    n = arr.shape[0]
    if n > budget:
        raise BudgetExceededError(f"dense eigen-decomposition of {n}x{n} exceeds budget {budget}")
    tol = default_tol(arr) if tol is None else tol
    _check_symmetric(arr, tol)
    sym = (arr + arr.T) / 2
    if method == "jacobi":
        values, vectors = _jacobi(sym, tol=1e-12 * max(n, 1) * max(inf_norm(sym), 1.0))
        order = np.argsort(values, kind="stable")
        values, vectors = values[order], vectors[:, order]
    elif method == "lapack":
        try:
            values, vectors = np.linalg.eigh(sym)
        except np.linalg.LinAlgError as exc:
            raise SpectralError(f"eigh failed: {exc}") from exc
    else:
        raise ValueError(f"method must be 'lapack' or 'jacobi', got {method!r}")
    spectrum = Spectrum(eigenvalues=values, eigenvectors=vectors)
    residual = spectrum.residual(sym)
    if residual > tol:
        raise SpectralError(f"eigenpair residual {residual:.3e} exceeds tolerance {tol:.3e}")
    return spectrum


def min_eigenvalue(
    a: np.ndarray | sp.spmatrix,
    tol: float | None = None,
    *,
    budget: int = DEFAULT_DENSE_BUDGET,
) -> float:
    """
    Smallest eigenvalue of a symmetric matrix.

    Matrices up to ``budget`` use the dense solver; larger (or sparse)
    inputs use Lanczos iteration from scipy.

    Raises:
        SpectralError: On asymmetry or non-convergence.
    """
    if sp.issparse(a):
        n = a.shape[0]
        if n <= budget:
            return min_eigenvalue(a.toarray(), tol, budget=budget)
        return _lanczos_min(sp.csr_matrix(a, dtype=np.float64), tol)
    arr = _as_square(a)
    tol = default_tol(arr) if tol is None else tol
    _check_symmetric(arr, tol)
    if arr.shape[0] <= budget:
        try:
            return float(np.linalg.eigvalsh((arr + arr.T) / 2)[0])
        except np.linalg.LinAlgError as exc:
            raise SpectralError(f"eigvalsh failed: {exc}") from exc
    return _lanczos_min(sp.csr_matrix(arr), tol)


def _lanczos_min(a: sp.csr_matrix, tol: float | None) -> float:
    logger.debug("Lanczos min eigenvalue on %dx%d", a.shape[0], a.shape[0])
    try:
        values = eigsh(a, k=1, which="SA", tol=0 if tol is None else min(tol, 1e-10),
                       return_eigenvectors=False)
    except (ArpackNoConvergence, ArpackError) as exc:
        raise SpectralError(f"Lanczos iteration did not converge: {exc}") from exc
    return float(values[0])


def distinct_eigenvalues(
    values: np.ndarray | Spectrum,
    cluster_tol: float = 1e-6,
) -> list[tuple[float, int]]:
    """
    Cluster eigenvalues and count multiplicities.

    Consecutive sorted eigenvalues closer than ``cluster_tol`` are merged;
    each cluster is reported by its mean.

    Returns:
        ``(value, multiplicity)`` pairs in ascending order.
    """
    arr = values.eigenvalues if isinstance(values, Spectrum) else np.sort(np.asarray(values))
    clusters: list[list[float]] = []
    for x in arr:
        if clusters and x - clusters[-1][-1] <= cluster_tol:
            clusters[-1].append(float(x))
        else:
            clusters.append([float(x)])
    return [(math.fsum(c) / len(c), len(c)) for c in clusters]


def eigenspace_embedding(
    a: np.ndarray,
    target: float,
    tol: float | None = None,
    *,
    cluster_tol: float | None = None,
    method: EigenMethod = "lapack",
    budget: int = DEFAULT_DENSE_BUDGET,
) -> Embedding:
    """
    Unit vectors from the eigenspace of ``a`` at ``target``.

    Row i of the eigenvector block spanning the target eigenspace is
    rescaled to unit norm. The dimension equals the numerical multiplicity
    of the target (eigenvalues within ``cluster_tol`` of it, default
    1e-6 * ||A||_inf).

    Raises:
        SpectralError: If no eigenvalue lies within ``cluster_tol`` of the
            target or some vertex has a zero projector row.
    """
    arr = _as_square(a)
    spectrum = symmetric_eigen(arr, tol, method=method, budget=budget)
    cluster_tol = 1e-6 * max(inf_norm(arr), 1.0) if cluster_tol is None else cluster_tol
    mask = np.abs(spectrum.eigenvalues - target) <= cluster_tol
    if not mask.any():
        nearest = float(spectrum.eigenvalues[np.argmin(np.abs(spectrum.eigenvalues - target))])
        raise SpectralError(f"no eigenvalue within {cluster_tol:.1e} of {target}; nearest is {nearest}")
    block = spectrum.eigenvectors[:, mask]
    norms = np.linalg.norm(block, axis=1)
    if np.min(norms) <= 1e-12:
        raise SpectralError(
            f"vertex {int(np.argmin(norms))} has a zero projector row; embedding is degenerate"
        )
    spread = float(np.max(norms) - np.min(norms))
    if spread > 1e-6:
        logger.warning("Projector rows have non-uniform norms (spread %.3e)", spread)
    logger.debug("Eigenspace at %.6f has dimension %d", target, block.shape[1])
    return Embedding(vectors=block / norms[:, None])

"""Hyperplane rounding: analytic expectation and Monte Carlo sampling."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from cutbench.core.models import CutAssignment, Embedding, Graph
from cutbench.core.rng import make_rng

logger = logging.getLogger("cutbench.gw")

_BATCH_CELLS = 2_000_000


def _edge_inner_products(g: Graph, e: Embedding) -> np.ndarray:
    if e.n != g.n:
        raise ValueError(f"embedding has {e.n} vectors, graph has {g.n} vertices")
    u, v, _ = g.edge_arrays
    x = e.vectors
    return np.clip(np.einsum("ij,ij->i", x[u], x[v]), -1.0, 1.0)


def embedding_value(g: Graph, e: Embedding) -> float:
    """SDP objective z_P(x) = ½ Σ w_uv (1 - x_u · x_v)."""
    dots = _edge_inner_products(g, e)
    _, _, w = g.edge_arrays
    return math.fsum(w * (1.0 - dots)) / 2


def hp_expectation(g: Graph, e: Embedding) -> float:
    """
    Expected cut of random-hyperplane rounding.

    Returns:
        Σ w_uv arccos(x_u · x_v) / pi, with inner products clamped to [-1, 1].

    Raises:
        ValueError: If the embedding and graph sizes differ.
    """
    dots = _edge_inner_products(g, e)
    _, _, w = g.edge_arrays
    return math.fsum(w * np.arccos(dots)) / math.pi


def _sides(projections: np.ndarray) -> np.ndarray:
    return np.where(projections >= 0.0, 1, -1).astype(np.int8)


def hyperplane_round(e: Embedding, seed: int) -> CutAssignment:
    """
    Round an embedding with one random hyperplane.

    The normal vector is standard normal from ``make_rng(seed)``; vertex i
    goes to side sign(r · x_i) with zero resolved to +1.
    """
    r = make_rng(seed).standard_normal(e.dim)
    return CutAssignment.from_array(_sides(e.vectors @ r))


@dataclass
class RoundingStats:
    """Summary of repeated hyperplane roundings."""

    samples: int
    mean: float
    std: float
    best_value: float
    best_cut: CutAssignment

    @property
    def stderr(self) -> float:
        """Standard error of the mean."""
        return self.std / math.sqrt(self.samples) if self.samples > 1 else math.inf


def monte_carlo_rounding(g: Graph, e: Embedding, samples: int, seed: int) -> RoundingStats:
    """
    Sample ``samples`` hyperplane roundings in batches.

    Hyperplane normals are consumed row by row from one ``make_rng(seed)``
    stream, so the first sample matches ``hyperplane_round(e, seed)``.

    Raises:
        ValueError: If ``samples < 1`` or sizes disagree.
    """
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    if e.n != g.n:
        raise ValueError(f"embedding has {e.n} vectors, graph has {g.n} vertices")
    rng = make_rng(seed)
    u, v, w = g.edge_arrays
    batch = max(1, min(4096, _BATCH_CELLS // max(g.num_edges, g.n, 1)))
    values = np.empty(samples)
    best_value, best_sides = -math.inf, np.ones(g.n, dtype=np.int8)
    done = 0
    while done < samples:
        size = min(batch, samples - done)
        normals = rng.standard_normal((size, e.dim))
        sides = _sides(e.vectors @ normals.T)
        crossing = (1 - sides[u].astype(np.int64) * sides[v]) // 2
        cuts = w @ crossing if len(w) else np.zeros(size)
        values[done:done + size] = cuts
        k = int(np.argmax(cuts))
        if cuts[k] > best_value:
            best_value, best_sides = float(cuts[k]), sides[:, k].copy()
        done += size
    std = float(np.std(values, ddof=1)) if samples > 1 else 0.0
    logger.debug("Rounding: %d samples, mean %.6f, std %.6f", samples, float(values.mean()), std)
    return RoundingStats(
        samples=samples,
        mean=float(values.mean()),
        std=std,
        best_value=best_value,
        best_cut=CutAssignment.from_array(best_sides),
    )

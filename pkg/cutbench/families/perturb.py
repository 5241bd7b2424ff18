"""Gaussian edge-weight perturbation."""
from __future__ import annotations

import logging

from cutbench.core.errors import DomainError
from cutbench.core.models import Graph
from cutbench.core.rng import make_rng

logger = logging.getLogger("cutbench.families")


def perturb_weights(g: Graph, sigma: float, seed: int) -> Graph:
    """
    Replace every edge weight with an independent draw of 1 + sigma * Z.

    Z is standard normal from ``make_rng(seed)``, drawn once per edge in
    sorted edge order, so identical (g, sigma, seed) give identical weights.
    Non-unit input weights are discarded with a warning; only the topology
    is kept.

    Raises:
        DomainError: If sigma is negative or not finite.
    """
    if not sigma >= 0 or sigma == float("inf"):
        raise DomainError(f"sigma must be a finite value >= 0, got {sigma}")
    if not g.is_unit_weight:
        logger.warning("perturb_weights input has non-unit weights; they are replaced")
    z = make_rng(seed).standard_normal(g.num_edges)
    weights = 1.0 + sigma * z
    edges = tuple((u, v, float(w)) for (u, v, _), w in zip(g.edges, weights, strict=True))
    return Graph(n=g.n, edges=edges)

"""Structural queries on Graph instances."""
from __future__ import annotations

import math
from collections import Counter

import networkx as nx
import numpy as np

from cutbench.core.errors import DomainError
from cutbench.core.models import CutAssignment, Graph, SrgParams


def _sides_array(g: Graph, a: CutAssignment | np.ndarray) -> np.ndarray:
    sides = a.as_array() if isinstance(a, CutAssignment) else np.asarray(a)
    if sides.shape != (g.n,):
        raise ValueError(f"cut has {sides.shape[0] if sides.ndim else 0} sides, graph has {g.n} vertices")
    return sides.astype(np.int64, copy=False)


def cut_value(g: Graph, a: CutAssignment | np.ndarray) -> float:
    """
    Weight of the edges crossing a bipartition.

    Args:
        g: The graph.
        a: A CutAssignment, or a length-n array of ±1 labels.

    Returns:
        ½ Σ w_uv (1 - s_u s_v).

    Raises:
        ValueError: If the assignment length differs from ``g.n``.
    """
    s = _sides_array(g, a)
    u, v, w = g.edge_arrays
    if not len(w):
        return 0.0
    return float(np.dot(w, 1 - s[u] * s[v]) / 2)


def _check_vertex(g: Graph, x: int) -> None:
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} out of range for n={g.n}")


def common_neighbors(g: Graph, u: int, v: int) -> int:
    """
    Number of vertices adjacent to both ``u`` and ``v`` (weights ignored).

    Raises:
        ValueError: If either vertex is out of range or ``u == v``.
    """
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise ValueError(f"common_neighbors needs two distinct vertices, got {u} twice")
    return len(g.neighbors[u] & g.neighbors[v])


def check_regular(g: Graph) -> int | None:
    """Common vertex degree, or ``None`` if degrees differ."""
    degrees = set(g.degrees)
    return degrees.pop() if len(degrees) == 1 else None


def check_srg(g: Graph) -> SrgParams | None:
    """
    Strongly regular parameters of ``g``, if it has them.

    The graph must be k-regular with 0 < k < n - 1, every adjacent pair must
    share exactly lambda neighbors and every distinct non-adjacent pair exactly
    mu. Complete and edgeless graphs are rejected.
    """
    k = check_regular(g)
    if k is None or not 0 < k < g.n - 1:
        return None
    a = g.adjacency_matrix(weighted=False)
    counts = np.rint(a @ a).astype(np.int64)
    adjacent = a > 0
    off_diag = ~adjacent & ~np.eye(g.n, dtype=bool)
    lam_values = np.unique(counts[adjacent])
    mu_values = np.unique(counts[off_diag])
    if len(lam_values) != 1 or len(mu_values) != 1:
        return None
    return SrgParams(n=g.n, k=k, lam=int(lam_values[0]), mu=int(mu_values[0]))


def is_triangle_free(g: Graph) -> bool:
    """True when no edge has a common neighbor."""
    nbrs = g.neighbors
    return all(not (nbrs[u] & nbrs[v]) for u, v, _ in g.edges)


def is_primitive(g: Graph) -> bool:
    """True when both ``g`` and its complement are connected."""
    if g.n < 2:
        return False
    h = g.to_networkx()
    return nx.is_connected(h) and nx.is_connected(nx.complement(h))


def has_negative_weight(g: Graph) -> bool:
    """True when at least one edge weight is negative."""
    return any(w < 0 for _, _, w in g.edges)


def magnitude_range(g: Graph) -> float:
    """
    Spread of edge-weight magnitudes in decades.

    Returns:
        max log10|w| - min log10|w| over edges with w != 0.

    Raises:
        DomainError: If no edge has a nonzero weight.
    """
    logs = [math.log10(abs(w)) for _, _, w in g.edges if w != 0]
    if not logs:
        raise DomainError("magnitude_range needs at least one nonzero edge weight")
    return max(logs) - min(logs)


def degree_histogram(g: Graph) -> list[tuple[int, int]]:
    """``(degree, vertex count)`` rows sorted by degree."""
    return sorted(Counter(g.degrees).items())


def weight_histogram(g: Graph, bins: int = 20) -> list[tuple[float, float, int]]:
    """
    Histogram of raw edge weights.

    Args:
        g: The graph.
        bins: Number of equal-width bins.

    Returns:
        ``(lower edge, upper edge, count)`` rows; empty for an edgeless graph.
    """
    if bins < 1:
        raise ValueError(f"bins must be >= 1, got {bins}")
    _, _, w = g.edge_arrays
    if not len(w):
        return []
    counts, edges = np.histogram(w, bins=bins)
    return [(float(edges[i]), float(edges[i + 1]), int(c)) for i, c in enumerate(counts)]

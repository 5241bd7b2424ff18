"""Core domain models for cutbench."""
from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction
from functools import cached_property
from typing import Any

import networkx as nx
import numpy as np

WeightedEdge = tuple[int, int, float]


@dataclass(frozen=True)
class Graph:
    """
    Weighted undirected simple graph.

    Vertices are ``0..n-1``. Edges are stored once as ``(u, v, w)`` with
    ``u < v``, sorted by ``(u, v)``; construction rejects self-loops,
    duplicate pairs and non-finite weights. Instances are immutable, so the
    derived views below are computed once and shared between readers.
    """

    n: int
    edges: tuple[WeightedEdge, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        canonical = tuple(sorted((int(u), int(v), float(w)) for u, v, w in self.edges))
        seen: set[tuple[int, int]] = set()
        for u, v, w in canonical:
            if not 0 <= u < v < self.n:
                raise ValueError(f"edge ({u}, {v}) must satisfy 0 <= u < v < {self.n}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            if not math.isfinite(w):
                raise ValueError(f"edge ({u}, {v}) has non-finite weight {w}")
            seen.add((u, v))
        object.__setattr__(self, "edges", canonical)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int] | tuple[int, int, float]],
    ) -> Graph:
        """
        Build a graph from loosely ordered edges.

        Args:
            n: Vertex count.
            edges: ``(u, v)`` or ``(u, v, w)`` tuples in either orientation;
                a missing weight defaults to 1.

        Returns:
            The canonical Graph.

        Raises:
            ValueError: On self-loops, duplicates or out-of-range indices.
        """
        out: list[WeightedEdge] = []
        for e in edges:
            u, v = int(e[0]), int(e[1])
            w = float(e[2]) if len(e) > 2 else 1.0  # type: ignore[misc]
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            out.append((u, v, w) if u < v else (v, u, w))
        return cls(n=n, edges=tuple(out))

    @property
    def num_edges(self) -> int:
        """Number of stored edges."""
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, float], ...], ...]:
        """Per-vertex ``(neighbor, weight)`` lists, consistent with ``edges``."""
        lists: list[list[tuple[int, float]]] = [[] for _ in range(self.n)]
        for u, v, w in self.edges:
            lists[u].append((v, w))
            lists[v].append((u, w))
        return tuple(tuple(x) for x in lists)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        """Per-vertex neighbor sets, ignoring weights."""
        return tuple(frozenset(v for v, _ in adj) for adj in self.adjacency)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Unweighted vertex degrees."""
        return tuple(len(adj) for adj in self.adjacency)

    @cached_property
    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Read-only ``(u, v, w)`` numpy arrays in edge order."""
        if self.edges:
            u, v, w = (np.array(col) for col in zip(*self.edges, strict=True))
        else:
            u, v, w = np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64), np.zeros(0)
        arrays = (u.astype(np.int64), v.astype(np.int64), w.astype(np.float64))
        for a in arrays:
            a.setflags(write=False)
        return arrays

    @cached_property
    def total_weight(self) -> float:
        """Sum of all edge weights."""
        return math.fsum(w for _, _, w in self.edges)

    @cached_property
    def is_unit_weight(self) -> bool:
        """True when every weight is exactly 1."""
        return all(w == 1.0 for _, _, w in self.edges)

    def adjacency_matrix(self, weighted: bool = True) -> np.ndarray:
        """
        Dense symmetric adjacency matrix.

        Args:
            weighted: Use edge weights (True) or 0/1 structure (False).

        Returns:
            A fresh ``n x n`` float array.
        """
        u, v, w = self.edge_arrays
        a = np.zeros((self.n, self.n))
        vals = w if weighted else np.ones_like(w)
        a[u, v] = vals
        a[v, u] = vals
        return a

    def to_networkx(self) -> nx.Graph:
        """Convert to a ``networkx.Graph`` with a ``weight`` edge attribute."""
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_weighted_edges_from(self.edges)
        return g


@dataclass(frozen=True)
class CutAssignment:
    """A bipartition: one side label in {-1, +1} per vertex."""

    sides: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sides", tuple(int(s) for s in self.sides))
        bad = [s for s in self.sides if s not in (-1, 1)]
        if bad:
            raise ValueError(f"sides must be -1 or +1, got {bad[0]}")

    @classmethod
    def from_array(cls, sides: np.ndarray | Iterable[int]) -> CutAssignment:
        """Build from any integer sequence of ±1 values."""
        return cls(sides=tuple(int(s) for s in sides))

    def as_array(self) -> np.ndarray:
        """Sides as an int8 numpy array."""
        return np.array(self.sides, dtype=np.int8)

    def flipped(self) -> CutAssignment:
        """The same partition with every label negated."""
        return CutAssignment(sides=tuple(-s for s in self.sides))


@dataclass(frozen=True)
class KarloffParams:
    """Parameters (m, b) of the Karloff graph J(m, m/2, b)."""

    m: int
    b: int

    def __post_init__(self) -> None:
        if self.m < 2 or self.m % 2:
            raise ValueError(f"m must be an even integer >= 2, got {self.m}")
        if not 0 <= self.b <= self.m // 2:
            raise ValueError(f"b must be in [0, {self.m // 2}], got {self.b}")

    @property
    def half(self) -> int:
        """Subset size t = m/2."""
        return self.m // 2

    @property
    def r(self) -> Fraction:
        """Overlap ratio b/m."""
        return Fraction(self.b, self.m)

    @property
    def in_formula_range(self) -> bool:
        """True when 0 <= b < m/4, where the ratio and Max-Cut formulas hold."""
        return 4 * self.b < self.m

    @property
    def is_trivial(self) -> bool:
        """b = 0 gives a perfect matching between complementary subsets."""
        return self.b == 0

    @property
    def label(self) -> str:
        """Display label, e.g. ``J(6,3,1)``."""
        return f"J({self.m},{self.half},{self.b})"


@dataclass(frozen=True)
class SrgParams:
    """Strongly regular graph parameters (n, k, lambda, mu)."""

    n: int
    k: int
    lam: int
    mu: int

    def __post_init__(self) -> None:
        if not 0 < self.k < self.n - 1:
            raise ValueError(f"k must satisfy 0 < k < n-1, got k={self.k}, n={self.n}")
        if self.lam < 0 or self.mu < 0:
            raise ValueError(f"lambda and mu must be >= 0, got {self.lam}, {self.mu}")
        if self.k * (self.k - self.lam - 1) != (self.n - self.k - 1) * self.mu:
            raise ValueError(
                f"parameters {self.as_tuple()} violate k(k-lambda-1) = (n-k-1)mu"
            )

    @property
    def edge_count(self) -> int:
        """|E| = nk/2."""
        return self.n * self.k // 2

    def as_tuple(self) -> tuple[int, int, int, int]:
        """``(n, k, lambda, mu)``."""
        return (self.n, self.k, self.lam, self.mu)


@dataclass(frozen=True, eq=False)
class Embedding:
    """One unit vector per vertex (rows of ``vectors``), the SDP factor x."""

    vectors: np.ndarray

    def __post_init__(self) -> None:
        x = np.asarray(self.vectors, dtype=np.float64)
        if x.ndim != 2 or x.shape[1] < 1:
            raise ValueError(f"vectors must be a 2-D array with >= 1 column, got {x.shape}")
        norms = np.linalg.norm(x, axis=1)
        if x.shape[0] and np.max(np.abs(norms - 1.0)) > 1e-8:
            worst = int(np.argmax(np.abs(norms - 1.0)))
            raise ValueError(f"vector {worst} has norm {norms[worst]!r}, expected 1")
        x.setflags(write=False)
        object.__setattr__(self, "vectors", x)

    @property
    def n(self) -> int:
        """Number of vectors."""
        return int(self.vectors.shape[0])

    @property
    def dim(self) -> int:
        """Common dimension d."""
        return int(self.vectors.shape[1])

    def gram(self) -> np.ndarray:
        """Y = x xᵀ."""
        return self.vectors @ self.vectors.T


@dataclass(eq=False)
class SdpCertificate:
    """Primal value, dual multipliers and PSD slack of a GW SDP solution."""

    primal_value: float
    dual_vector: np.ndarray
    dual_value: float
    min_eig_slack: float
    feasible_dual_value: float
    certified: bool = False

    @property
    def gap(self) -> float:
        """Duality gap against the dual-feasible bound."""
        return self.feasible_dual_value - self.primal_value

    def summary(self) -> str:
        """One-line description for reports."""
        state = "certified" if self.certified else "uncertified"
        return (
            f"{state} zP={self.primal_value:.6f} zD={self.feasible_dual_value:.6f} "
            f"slack={self.min_eig_slack:.2e}"
        )


@dataclass(frozen=True)
class QaoaAngles:
    """Depth-1 QAOA angles and the expected cut they achieve."""

    gamma: float
    beta: float
    value: float


class MaxCutStatus(StrEnum):
    """How much is known about a reported cut."""

    EXACT = "exact"
    CERTIFIED = "certified"
    HEURISTIC = "heuristic"


@dataclass
class MaxCutResult:
    """Best cut found by a solver, with an optional upper bound."""

    best_cut: CutAssignment
    value: float
    status: MaxCutStatus
    upper_bound: Fraction | float | None = None
    solver: str = ""
    metadata: dict[str, Any] = field(default_factory=dict)

    @property
    def gap(self) -> float | None:
        """upper_bound - value, when a bound is known."""
        if self.upper_bound is None:
            return None
        return float(self.upper_bound) - self.value

"""Tests for structural graph queries."""
from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given

from cutbench.core.errors import DomainError
from cutbench.core.models import CutAssignment, Graph, SrgParams
from cutbench.graphs.queries import (
    check_regular,
    check_srg,
    common_neighbors,
    cut_value,
    degree_histogram,
    has_negative_weight,
    is_primitive,
    is_triangle_free,
    magnitude_range,
    weight_histogram,
)
from tests.builders import complete, cycle, weighted_graphs


class TestCutValue:
    def test_triangle(self, triangle: Graph) -> None:
        assert cut_value(triangle, CutAssignment(sides=(1, -1, 1))) == 2.0
        assert cut_value(triangle, np.array([1, 1, 1])) == 0.0

    def test_weighted(self, weighted_triangle: Graph) -> None:
        # crosses (0,1) and (1,2)
        assert cut_value(weighted_triangle, np.array([1, -1, 1])) == pytest.approx(2.5)

    def test_length_mismatch(self, c5: Graph) -> None:
        with pytest.raises(ValueError, match="5 vertices"):
            cut_value(c5, np.array([1, -1]))

    def test_edgeless(self) -> None:
        assert cut_value(Graph(n=2), np.array([1, -1])) == 0.0

    @given(weighted_graphs())
    def test_flip_invariant_and_matches_definition(self, case: tuple[Graph, list[int]]) -> None:
        g, sides = case
        a = CutAssignment(sides=tuple(sides))
        expected = math.fsum(w for u, v, w in g.edges if sides[u] != sides[v])
        assert cut_value(g, a) == pytest.approx(expected, abs=1e-9)
        assert cut_value(g, a.flipped()) == pytest.approx(cut_value(g, a), abs=1e-9)


class TestNeighborhoods:
    def test_common_neighbors(self, k4: Graph, c4: Graph) -> None:
        assert common_neighbors(k4, 0, 1) == 2
        assert common_neighbors(c4, 0, 2) == 2
        assert common_neighbors(c4, 0, 1) == 0

    def test_common_neighbors_errors(self, c4: Graph) -> None:
        with pytest.raises(ValueError, match="distinct"):
            common_neighbors(c4, 1, 1)
        with pytest.raises(ValueError, match="out of range"):
            common_neighbors(c4, 0, 9)

    def test_triangle_free(self, c5: Graph, triangle: Graph) -> None:
        assert is_triangle_free(c5)
        assert not is_triangle_free(triangle)


class TestRegularity:
    def test_regular(self, c5: Graph, path3: Graph) -> None:
        assert check_regular(c5) == 2
        assert check_regular(path3) is None

    def test_srg_rook(self, rook16: Graph) -> None:
        assert check_srg(rook16) == SrgParams(n=16, k=6, lam=2, mu=2)
        assert is_primitive(rook16)

    def test_srg_symplectic(self, w3: Graph) -> None:
        assert check_srg(w3) == SrgParams(n=40, k=12, lam=2, mu=4)

    def test_c5_is_srg(self, c5: Graph) -> None:
        assert check_srg(c5) == SrgParams(n=5, k=2, lam=0, mu=1)

    def test_not_srg(self) -> None:
        # C_6 is regular but non-adjacent pairs share 0 or 1 neighbors
        assert check_srg(cycle(6)) is None
        assert check_srg(complete(5)) is None

    def test_imprimitive(self) -> None:
        # two disjoint triangles: SRG(6,2,1,0), disconnected
        g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert check_srg(g) == SrgParams(n=6, k=2, lam=1, mu=0)
        assert not is_primitive(g)


class TestWeights:
    def test_negative(self, weighted_triangle: Graph, c5: Graph) -> None:
        assert has_negative_weight(weighted_triangle)
        assert not has_negative_weight(c5)

    def test_magnitude_range(self, weighted_triangle: Graph) -> None:
        assert magnitude_range(weighted_triangle) == pytest.approx(math.log10(4))

    def test_magnitude_range_needs_nonzero(self) -> None:
        with pytest.raises(DomainError):
            magnitude_range(Graph.from_edges(2, [(0, 1, 0.0)]))

    def test_degree_histogram(self, path3: Graph) -> None:
        assert degree_histogram(path3) == [(1, 2), (2, 1)]

    def test_weight_histogram(self, weighted_triangle: Graph) -> None:
        rows = weight_histogram(weighted_triangle, bins=3)
        assert len(rows) == 3
        assert sum(c for _, _, c in rows) == 3
        assert rows[0][0] == -1.0
        assert rows[-1][1] == 2.0
        assert weight_histogram(Graph(n=2)) == []

    def test_weight_histogram_bins(self, c5: Graph) -> None:
        with pytest.raises(ValueError):
            weight_histogram(c5, bins=0)

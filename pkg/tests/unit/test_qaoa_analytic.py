"""Tests for the depth-1 QAOA closed forms."""
from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cutbench.core.errors import DomainError, IncompatibleOptionsError
from cutbench.core.models import Graph, KarloffParams, QaoaAngles
from cutbench.families.karloff import karloff_worst_b
from cutbench.qaoa.analytic import (
    EdgeGroup,
    edge_cut_prob,
    edge_groups,
    expected_cut_param,
    graph_expectation,
    groups_for_graph,
    int_power,
    karloff_triangle_free_ratio,
    limiting_ratio,
    triangle_free_angles,
    triangle_free_factor,
    triangle_free_optimum,
)
from cutbench.qaoa.report import qaoa_report

angles = st.floats(min_value=-math.pi, max_value=math.pi, allow_nan=False)


@st.composite
def edge_params(draw: st.DrawFn) -> tuple[int, int, int]:
    du = draw(st.integers(min_value=0, max_value=40))
    dv = draw(st.integers(min_value=0, max_value=40))
    lam = draw(st.integers(min_value=0, max_value=min(du, dv)))
    return du, dv, lam


class TestEdgeCutProb:
    def test_single_edge(self) -> None:
        gamma, beta = 0.7, 0.3
        expected = 0.5 + 0.5 * math.sin(4 * beta) * math.sin(gamma)
        assert edge_cut_prob(gamma, beta, 0, 0, 0) == pytest.approx(expected)
        assert edge_cut_prob(math.pi / 2, math.pi / 8, 0, 0, 0) == pytest.approx(1.0)

    def test_origin_is_half(self) -> None:
        assert edge_cut_prob(0.0, 0.0, 5, 7, 3) == 0.5

    @given(angles, angles, edge_params())
    def test_is_probability(self, gamma: float, beta: float, params: tuple[int, int, int]) -> None:
        p = edge_cut_prob(gamma, beta, *params)
        assert -1e-12 <= p <= 1 + 1e-12

    @pytest.mark.parametrize(("du", "dv", "lam"), [(-1, 0, 0), (2, 3, 3), (2, 2, -1)])
    def test_invalid_params(self, du: int, dv: int, lam: int) -> None:
        with pytest.raises(ValueError):
            edge_cut_prob(0.1, 0.1, du, dv, lam)

    def test_expected_cut_param(self) -> None:
        assert expected_cut_param(90, 8, 8, 4, 0.0, 0.0) == 45.0


class TestIntPower:
    def test_small(self) -> None:
        assert int_power(-0.5, 3) == -0.125
        assert int_power(0.3, 0) == 1.0
        assert np.allclose(int_power(np.array([-0.5, 0.5]), 2), [0.25, 0.25])

    def test_huge_exponent_keeps_parity(self) -> None:
        assert int_power(-1.0, 2**80 + 1) == -1.0
        assert int_power(-1.0, 2**80) == 1.0
        assert int_power(0.999, 2**80) == 0.0
        arr = int_power(np.array([-1.0, 0.5]), 2**2000 + 1)
        assert list(arr) == [-1.0, 0.0]

    def test_negative_exponent(self) -> None:
        with pytest.raises(ValueError):
            int_power(2.0, -1)


class TestEdgeGroups:
    def test_path(self, path3: Graph) -> None:
        assert edge_groups(path3) == {(0, 1, 0): 2}

    def test_karloff_is_one_group(self, j631: Graph) -> None:
        assert edge_groups(j631) == {(8, 8, 4): 90}

    def test_graph_expectation_sums_groups(self, path3: Graph) -> None:
        gamma, beta = 0.4, -0.2
        assert graph_expectation(path3, gamma, beta) == pytest.approx(
            2 * edge_cut_prob(gamma, beta, 0, 1, 0)
        )

    def test_weighted_rejected(self, weighted_triangle: Graph) -> None:
        with pytest.raises(IncompatibleOptionsError, match="statevector"):
            groups_for_graph(weighted_triangle)

    def test_group_validation(self) -> None:
        with pytest.raises(ValueError, match="count"):
            EdgeGroup(1, 1, 0, -1)


class TestTriangleFree:
    def test_factor(self) -> None:
        assert triangle_free_factor(1) == 1.0
        assert triangle_free_factor(2) == pytest.approx(0.5)
        assert triangle_free_factor(16) == pytest.approx(0.25 * (15 / 16) ** 7.5)

    def test_factor_huge_degree(self) -> None:
        d = 10**40
        assert triangle_free_factor(d) == pytest.approx(math.exp(-0.5) / 1e20)

    def test_factor_domain(self) -> None:
        with pytest.raises(DomainError):
            triangle_free_factor(0)

    def test_c5_optimum(self, c5: Graph) -> None:
        best = triangle_free_angles(2, 5)
        assert best.gamma == pytest.approx(math.pi / 4)
        assert best.beta == pytest.approx(math.pi / 8)
        assert best.value == pytest.approx(3.75)
        assert graph_expectation(c5, best.gamma, best.beta) == pytest.approx(3.75)

    def test_single_edge_angles(self) -> None:
        best = triangle_free_angles(1, 1)
        assert best.value == pytest.approx(1.0)
        assert best.gamma == pytest.approx(math.pi / 2)

    def test_optimum_scales_with_edges(self) -> None:
        assert triangle_free_optimum(16, 560) == pytest.approx(280 * (1 + triangle_free_factor(16)))

    @pytest.mark.parametrize(
        ("m", "b", "expected"), [(8, 1, 0.7694), (10, 1, 0.7016), (12, 1, 0.6611)]
    )
    def test_karloff_ratio(self, m: int, b: int, expected: float) -> None:
        assert karloff_triangle_free_ratio(KarloffParams(m=m, b=b)) == pytest.approx(expected, abs=1e-4)


class TestLimitingRatio:
    def test_value(self) -> None:
        assert limiting_ratio(0.2) == pytest.approx(0.8333, abs=1e-4)

    @pytest.mark.parametrize("r", [0.0, 0.25, -0.1])
    def test_domain(self, r: float) -> None:
        with pytest.raises(DomainError):
            limiting_ratio(r)

    def test_huge_karloff_matches_limit(self) -> None:
        m = 10_000
        b = karloff_worst_b(m)
        ratio = karloff_triangle_free_ratio(KarloffParams(m=m, b=b))
        assert ratio == pytest.approx(limiting_ratio(b / m), abs=1e-6)
        assert ratio == pytest.approx(0.592, abs=1e-3)

    def test_worst_overlap_converges(self) -> None:
        ratios = [
            karloff_triangle_free_ratio(KarloffParams(m=m, b=karloff_worst_b(m)))
            for m in (100, 1000, 10_000)
        ]
        gaps = [abs(r - 0.592) for r in ratios]
        assert gaps == sorted(gaps, reverse=True)
        assert gaps[-1] < 1e-3


class TestQaoaReport:
    def test_ratio(self) -> None:
        report = qaoa_report(QaoaAngles(gamma=0.1, beta=0.2, value=3.0), 4)
        assert report.f1 == 3.0
        assert report.ratio == 0.75
        assert report.method == "grid"

    def test_unknown_maxcut(self) -> None:
        assert qaoa_report(QaoaAngles(gamma=0.0, beta=0.0, value=1.0)).ratio is None

    def test_zero_maxcut(self) -> None:
        with pytest.raises(DomainError):
            qaoa_report(QaoaAngles(gamma=0.0, beta=0.0, value=0.0), 0)

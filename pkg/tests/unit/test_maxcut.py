"""Tests for the Max-Cut solvers and certification."""
from __future__ import annotations

import dataclasses
import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from cutbench.core.errors import BudgetExceededError, CertificationError
from cutbench.core.models import Graph, MaxCutStatus
from cutbench.graphs.queries import cut_value
from cutbench.maxcut import (
    BruteForceSolver,
    TabuSolver,
    brute_force,
    certify,
    get_solver,
    gray_code_cuts,
    integral_bound,
    local_search,
    mask_to_cut,
)
from tests.builders import weighted_graphs


def exhaustive_max(g: Graph) -> float:
    return max(
        cut_value(g, np.array(sides)) for sides in itertools.product((-1, 1), repeat=g.n)
    )


class TestBruteForce:
    @pytest.mark.parametrize(("name", "expected"), [("k2", 1.0), ("c5", 4.0), ("k4", 4.0), ("c4", 4.0)])
    def test_small_graphs(self, name: str, expected: float, request: pytest.FixtureRequest) -> None:
        g: Graph = request.getfixturevalue(name)
        r = brute_force(g)
        assert r.value == expected
        assert r.status is MaxCutStatus.EXACT
        assert r.gap == 0.0
        assert cut_value(g, r.best_cut) == expected

    def test_karloff(self, j631: Graph) -> None:
        r = brute_force(j631)
        assert r.value == 60.0
        assert r.best_cut.sides[0] == 1

    def test_weighted(self, weighted_triangle: Graph) -> None:
        r = brute_force(weighted_triangle)
        assert r.value == pytest.approx(2.5)
        assert r.best_cut.sides in ((1, -1, 1), (-1, 1, -1))

    def test_single_vertex(self) -> None:
        r = brute_force(Graph(n=1))
        assert r.value == 0.0
        assert r.best_cut.sides == (1,)

    def test_budget(self, c5: Graph) -> None:
        with pytest.raises(BudgetExceededError, match="budget 4"):
            brute_force(c5, max_vertices=4)

    @given(weighted_graphs(max_n=7))
    def test_matches_exhaustive(self, case: tuple[Graph, list[int]]) -> None:
        g, _ = case
        assert brute_force(g).value == pytest.approx(exhaustive_max(g), abs=1e-9)

    @given(weighted_graphs(max_n=6))
    def test_gray_code_values(self, case: tuple[Graph, list[int]]) -> None:
        g, _ = case
        masks = set()
        for mask, value in gray_code_cuts(g):
            masks.add(mask)
            assert value == pytest.approx(cut_value(g, mask_to_cut(mask, g.n)), abs=1e-9)
        assert len(masks) == 1 << (g.n - 1)
        assert all(mask & 1 == 0 for mask in masks)


class TestLocalSearch:
    def test_deterministic(self, j631: Graph) -> None:
        a = local_search(j631, restarts=10, seed=5)
        b = local_search(j631, restarts=10, seed=5)
        assert a == b

    def test_finds_karloff_maxcut(self, j631: Graph) -> None:
        r = local_search(j631)
        assert r.value == 60.0
        assert r.status is MaxCutStatus.HEURISTIC
        assert r.upper_bound is None
        assert set(r.metadata) == {"restarts", "best_restart", "moves"}
        assert r.metadata["restarts"] == 100

    def test_value_matches_cut(self, weighted_triangle: Graph) -> None:
        r = local_search(weighted_triangle, restarts=5, seed=0)
        assert r.value == pytest.approx(cut_value(weighted_triangle, r.best_cut))
        assert r.value == pytest.approx(2.5)

    def test_rook_graph(self, rook16: Graph) -> None:
        assert local_search(rook16, restarts=20).value == 32.0

    def test_invalid_restarts(self, c5: Graph) -> None:
        with pytest.raises(ValueError, match="restarts"):
            local_search(c5, restarts=0)

    @settings(max_examples=30)
    @given(weighted_graphs(max_n=6))
    def test_never_beats_exact(self, case: tuple[Graph, list[int]]) -> None:
        g, _ = case
        r = local_search(g, restarts=3, seed=1)
        assert r.value <= brute_force(g).value + 1e-9
        assert r.value == pytest.approx(cut_value(g, r.best_cut), abs=1e-9)


class TestCertify:
    def test_upgrades_on_matching_bound(self, j631: Graph) -> None:
        r = certify(j631, local_search(j631), Fraction(60))
        assert r.status is MaxCutStatus.CERTIFIED
        assert r.upper_bound == Fraction(60)
        assert r.gap == 0.0

    def test_reports_gap(self, j631: Graph) -> None:
        r = certify(j631, local_search(j631), 61)
        assert r.status is MaxCutStatus.HEURISTIC
        assert r.gap == pytest.approx(1.0)

    def test_exact_stays_exact(self, c5: Graph) -> None:
        assert certify(c5, brute_force(c5), 4).status is MaxCutStatus.EXACT

    def test_fractional_weights_not_upgraded(self, weighted_triangle: Graph) -> None:
        r = certify(weighted_triangle, local_search(weighted_triangle, restarts=5), 2.5)
        assert r.status is MaxCutStatus.HEURISTIC

    def test_cut_above_bound(self, j631: Graph) -> None:
        with pytest.raises(CertificationError, match="exceeds upper bound"):
            certify(j631, local_search(j631), 59)

    def test_value_mismatch(self, c5: Graph) -> None:
        bad = dataclasses.replace(brute_force(c5), value=5.0)
        with pytest.raises(CertificationError, match="reported cut value"):
            certify(c5, bad, 10)

    @pytest.mark.parametrize(
        ("z", "expected"), [(59.9999999, 60), (60.4, 60), (Fraction(121, 2), 60), (160.0, 160)]
    )
    def test_integral_bound(self, z: float | Fraction, expected: int) -> None:
        assert integral_bound(z) == Fraction(expected)


class TestGetSolver:
    def test_default_instances(self) -> None:
        assert isinstance(get_solver("brute"), BruteForceSolver)
        assert isinstance(get_solver("tabu"), TabuSolver)
        assert get_solver("tabu").name == "tabu"
        assert "Gray-code" in get_solver("brute").description

    def test_params(self, c5: Graph) -> None:
        solver = get_solver("brute", {"max_vertices": 4})
        with pytest.raises(BudgetExceededError):
            solver.solve(c5)
        assert get_solver("tabu", {"restarts": 3, "seed": 2}).solve(c5).value == 4.0

    def test_invalid_config(self, c5: Graph) -> None:
        with pytest.raises(ValueError, match="max_vertices"):
            get_solver("brute", {"max_vertices": 50}).solve(c5)
        with pytest.raises(ValueError, match="unknown"):
            get_solver("tabu", {"restart": 3})

    def test_unknown(self) -> None:
        with pytest.raises(ValueError, match="Unknown solver"):
            get_solver("gurobi")

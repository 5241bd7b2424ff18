"""Tests for the family registry and weight perturbation."""
from __future__ import annotations

import logging

import pytest

from cutbench import __version__
from cutbench.core.errors import DomainError, IncompatibleOptionsError
from cutbench.core.models import Graph
from cutbench.families import FAMILIES, KarloffFamily, PerturbFamily, get_family
from cutbench.families.perturb import perturb_weights


class TestGetFamily:
    def test_karloff_default(self) -> None:
        fam = get_family("karloff")
        assert isinstance(fam, KarloffFamily)
        assert fam.params.label == "J(6,3,1)"
        assert "Karloff" in fam.description

    def test_with_params(self) -> None:
        fam = get_family("karloff", {"m": 8, "b": 1})
        g = fam.generate()
        assert g.n == 70
        meta = fam.meta(g)
        assert meta.params == {"m": "8", "b": "1"}
        assert meta.edges == 560
        assert meta.tool_version == __version__

    def test_unknown(self) -> None:
        with pytest.raises(ValueError, match="Unknown family"):
            get_family("petersen")

    def test_registry(self) -> None:
        assert set(FAMILIES) == {"karloff", "perturb"}


class TestKarloffFamily:
    def test_refuses_outside_range(self) -> None:
        with pytest.raises(DomainError, match="force"):
            get_family("karloff", {"m": 8, "b": 2}).generate()

    def test_force(self) -> None:
        g = get_family("karloff", {"m": 8, "b": 2, "force": True}).generate()
        assert g.num_edges == 70 * 36 // 2


class TestPerturb:
    def test_deterministic(self, j631: Graph) -> None:
        a = perturb_weights(j631, 0.1, seed=3)
        b = perturb_weights(j631, 0.1, seed=3)
        c = perturb_weights(j631, 0.1, seed=4)
        assert a == b
        assert a != c
        assert [e[:2] for e in a.edges] == [e[:2] for e in j631.edges]

    def test_zero_sigma_keeps_unit_weights(self, c5: Graph) -> None:
        assert perturb_weights(c5, 0.0, seed=1) == c5

    def test_weights_center_on_one(self, j631: Graph) -> None:
        g = perturb_weights(j631, 0.05, seed=0)
        mean = g.total_weight / g.num_edges
        assert abs(mean - 1.0) < 0.02
        assert not g.is_unit_weight

    @pytest.mark.parametrize("sigma", [-0.1, float("inf"), float("nan")])
    def test_bad_sigma(self, c5: Graph, sigma: float) -> None:
        with pytest.raises(DomainError):
            perturb_weights(c5, sigma, seed=0)

    def test_warns_on_weighted_input(
        self, weighted_triangle: Graph, caplog: pytest.LogCaptureFixture
    ) -> None:
        with caplog.at_level(logging.WARNING, logger="cutbench.families"):
            perturb_weights(weighted_triangle, 0.1, seed=0)
        assert "non-unit weights" in caplog.text

    def test_family_needs_source(self) -> None:
        with pytest.raises(IncompatibleOptionsError):
            PerturbFamily().generate()

    def test_family_meta(self, c5: Graph) -> None:
        fam = get_family("perturb", {"sigma": 0.2, "seed": 9, "source_label": "c5.el"})
        g = fam.generate(c5)
        meta = fam.meta(g)
        assert (meta.sigma, meta.seed, meta.source) == (0.2, 9, "c5.el")

"""Tests for report schemas and table serialization."""
from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path

import pytest
from pydantic import ValidationError

from cutbench import __version__
from cutbench.experiments.report import Provenance, TableReport
from cutbench.reports.schemas import (
    ApproxReportSchema,
    HistogramRowSchema,
    InstanceMeta,
    SpectrumRowSchema,
    SweepRowSchema,
)

HP = 90 * math.acos(-1 / 3) / math.pi
STAMP = "2026-01-01T00:00:00+00:00"


def j631_row(**overrides: object) -> ApproxReportSchema:
    data: dict[str, object] = {
        "instance_id": "J(6,3,1)",
        "family": "karloff",
        "params": "m=6 b=1",
        "n": 20,
        "edges": 90,
        "degree": 9,
        "maxcut_value": 60.0,
        "maxcut_status": "exact",
        "gw_hp": HP,
        "gw_ratio": HP / 60,
    }
    data.update(overrides)
    return ApproxReportSchema.model_validate(data)


class TestInstanceMeta:
    def test_text_round_trip(self) -> None:
        meta = InstanceMeta(
            family="perturb",
            params={"m": "6", "b": "1"},
            seed=3,
            sigma=0.1,
            source="j631.el",
            n=20,
            edges=90,
            tool_version=__version__,
        )
        text = meta.to_text()
        assert text.splitlines()[0] == "family=perturb"
        assert "sigma=0.1" in text
        assert text.endswith(f"tool_version={__version__}\n")
        assert InstanceMeta.from_text(text) == meta

    def test_omits_unset_fields(self) -> None:
        text = InstanceMeta(family="karloff", tool_version="0.1.0").to_text()
        assert text == "family=karloff\ntool_version=0.1.0\n"

    def test_missing_equals(self) -> None:
        with pytest.raises(ValueError, match="line 2"):
            InstanceMeta.from_text("family=karloff\nbroken\n")

    def test_duplicate_key(self) -> None:
        with pytest.raises(ValueError, match="duplicate key 'm'"):
            InstanceMeta.from_text("family=karloff\nm=6\nm=8\ntool_version=0.1.0\n")

    def test_family_token(self) -> None:
        with pytest.raises(ValidationError):
            InstanceMeta(family="two words", tool_version="0.1.0")

    def test_negative_seed(self) -> None:
        with pytest.raises(ValidationError):
            InstanceMeta(family="karloff", seed=-1, tool_version="0.1.0")


class TestApproxReportSchema:
    def test_valid(self) -> None:
        row = j631_row(warnings=["a", "b"])
        assert row.gw_ratio == pytest.approx(0.91226, abs=1e-5)
        assert row.to_row()["warnings"] == "a; b"

    def test_ratio_must_match(self) -> None:
        with pytest.raises(ValidationError, match="numerator / maxcut_value"):
            j631_row(gw_ratio=0.9)

    def test_ratio_needs_maxcut(self) -> None:
        with pytest.raises(ValidationError, match="needs both"):
            j631_row(maxcut_value=None)

    def test_proven_ratio_at_most_one(self) -> None:
        with pytest.raises(ValidationError, match=r"\(0, 1\]"):
            j631_row(maxcut_value=50.0, gw_ratio=HP / 50)

    def test_heuristic_ratio_may_exceed_one(self) -> None:
        row = j631_row(maxcut_value=50.0, gw_ratio=HP / 50, maxcut_status="heuristic")
        assert row.gw_ratio is not None and row.gw_ratio > 1

    def test_unknown_status(self) -> None:
        with pytest.raises(ValidationError):
            j631_row(maxcut_status="guessed")


class TestSmallSchemas:
    def test_sweep_row(self) -> None:
        row = SweepRowSchema(
            m=8, b=1, r=0.125, alpha_gw=0.8889, alpha_qaoa=0.7694,
            alpha_qaoa_limit=2 / 3, triangle_free=True,
        )
        assert row.triangle_free

    def test_sweep_row_odd_m(self) -> None:
        with pytest.raises(ValidationError, match="even"):
            SweepRowSchema(
                m=7, b=1, r=1 / 7, alpha_gw=0.9, alpha_qaoa=0.8,
                alpha_qaoa_limit=0.7, triangle_free=True,
            )

    def test_histogram_and_spectrum(self) -> None:
        assert HistogramRowSchema(kind="degree", lower=9, upper=9, count=20).count == 20
        with pytest.raises(ValidationError):
            SpectrumRowSchema(eigenvalue=-3.0, multiplicity=0)


class TestTableReport:
    def report(self, rows: list[ApproxReportSchema] | None = None) -> TableReport:
        return TableReport(
            [j631_row()] if rows is None else rows,
            Provenance(seed=1, grid="10x10", generated=STAMP),
        )

    def test_csv(self) -> None:
        text = self.report().to_csv()
        lines = text.splitlines()
        assert lines[0].startswith("instance_id,family,params,n,edges")
        assert lines[-1] == f"# cutbench {__version__} seed=1 grid=10x10 generated={STAMP}"
        rows = list(csv.DictReader(io.StringIO("\n".join(lines[:-1]))))
        assert rows[0]["instance_id"] == "J(6,3,1)"
        assert float(rows[0]["gw_ratio"]) == pytest.approx(HP / 60)

    def test_jsonl(self) -> None:
        lines = self.report().to_jsonl().splitlines()
        assert json.loads(lines[0])["maxcut_status"] == "exact"
        trailer = json.loads(lines[-1])["provenance"]
        assert trailer == {
            "tool": "cutbench",
            "version": __version__,
            "seed": 1,
            "grid": "10x10",
            "generated": STAMP,
        }

    def test_empty(self) -> None:
        report = self.report([])
        assert report.header == []
        assert report.to_csv().startswith("# cutbench")
        assert len(report.to_jsonl().splitlines()) == 1

    def test_render_and_write(self, tmp_path: Path) -> None:
        report = self.report()
        with pytest.raises(ValueError, match="format"):
            report.render("xml")  # type: ignore[arg-type]
        path = tmp_path / "out" / "table.jsonl"
        report.write(path, "jsonl")
        assert path.read_text() == report.to_jsonl()

"""Integration tests for the cutbench CLI."""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from cutbench import __version__
from cutbench.cli.context import EXIT_BUDGET, EXIT_CERTIFICATION, EXIT_PARSE, exit_code_for
from cutbench.cli.main import app
from cutbench.core.errors import CertificationError
from cutbench.reports.schemas import InstanceMeta

runner = CliRunner()


def csv_rows(text: str) -> list[dict[str, str]]:
    """Data rows of a CSV report, skipping the provenance comment and stderr lines."""
    body = [line for line in text.splitlines() if "," in line and not line.startswith("#")]
    return list(csv.DictReader(io.StringIO("\n".join(body))))


@pytest.fixture
def j631_file(tmp_path: Path) -> Path:
    path = tmp_path / "j631.el"
    result = runner.invoke(app, ["--out", str(path), "gen", "karloff", "--m", "6", "--b", "1"])
    assert result.exit_code == 0, result.output
    return path


class TestVersion:
    def test_version(self) -> None:
        result = runner.invoke(app, ["version"])
        assert result.exit_code == 0
        assert f"cutbench v{__version__}" in result.output


class TestGen:
    def test_karloff_writes_instance_and_sidecar(self, j631_file: Path) -> None:
        assert j631_file.read_text().splitlines()[0] == "20 90"
        meta = InstanceMeta.from_text(j631_file.with_suffix(".meta").read_text())
        assert meta.family == "karloff"
        assert meta.params == {"m": "6", "b": "1"}
        assert (meta.n, meta.edges) == (20, 90)

    def test_karloff_needs_force(self, tmp_path: Path) -> None:
        out = tmp_path / "j.el"
        result = runner.invoke(app, ["--out", str(out), "gen", "karloff", "--m", "8", "--b", "2"])
        assert result.exit_code == 1
        assert "force" in result.output
        assert not out.exists()

    def test_karloff_budget(self, tmp_path: Path) -> None:
        out = tmp_path / "big.el"
        result = runner.invoke(app, ["--out", str(out), "gen", "karloff", "--m", "20", "--b", "1"])
        assert result.exit_code == EXIT_BUDGET

    def test_perturb(self, j631_file: Path, tmp_path: Path) -> None:
        out = tmp_path / "noisy.el"
        args = ["--out", str(out), "--seed", "4", "gen", "perturb", "--in", str(j631_file)]
        result = runner.invoke(app, [*args, "--sigma", "0.2"])
        assert result.exit_code == 0, result.output
        meta = InstanceMeta.from_text(out.with_suffix(".meta").read_text())
        assert (meta.family, meta.sigma, meta.seed, meta.source) == ("perturb", 0.2, 4, "j631.el")
        again = tmp_path / "again.el"
        runner.invoke(app, ["--out", str(again), *args[2:], "--sigma", "0.2"])
        assert again.read_text() == out.read_text()


class TestAnalyze:
    def test_file_with_sidecar(self, j631_file: Path) -> None:
        result = runner.invoke(app, ["--out", "-", "--grid", "100x100", "analyze", str(j631_file)])
        assert result.exit_code == 0, result.output
        (row,) = csv_rows(result.output)
        assert row["instance_id"] == "j631"
        assert row["family"] == "karloff"
        assert float(row["maxcut_value"]) == 60.0
        assert row["maxcut_status"] == "exact"
        assert float(row["gw_ratio"]) == pytest.approx(0.91226, abs=1e-5)
        assert "grid=100x100" in result.output

    def test_family_jsonl(self) -> None:
        args = ["--out", "-", "--format", "jsonl", "analyze", "--family", "karloff"]
        result = runner.invoke(app, [*args, "--m", "8", "--b", "1", "--analyses", "gw-analytic,qaoa-grid"])
        assert result.exit_code == 0, result.output
        lines = [line for line in result.output.splitlines() if line.startswith("{")]
        row = json.loads(lines[0])
        assert row["maxcut_status"] == "closed-form"
        assert row["gw_ratio"] == pytest.approx(0.8889, abs=1e-4)
        assert row["qaoa_ratio"] == pytest.approx(0.7694, abs=1e-4)
        assert json.loads(lines[-1])["provenance"]["tool"] == "cutbench"

    def test_terminal_table(self, j631_file: Path) -> None:
        args = ["--grid", "50x50", "analyze", str(j631_file), "--analyses", "gw-analytic"]
        result = runner.invoke(app, args)
        assert result.exit_code == 0, result.output
        assert "Analysis" in result.output

    def test_nothing_to_analyze(self) -> None:
        result = runner.invoke(app, ["analyze"])
        assert result.exit_code == 1
        assert "nothing to analyze" in result.output

    def test_unknown_analysis(self, j631_file: Path) -> None:
        result = runner.invoke(app, ["analyze", str(j631_file), "--analyses", "magic"])
        assert result.exit_code == 2

    def test_parse_error(self, tmp_path: Path) -> None:
        bad = tmp_path / "bad.el"
        bad.write_text("3 2\n1 2\n")
        result = runner.invoke(app, ["analyze", str(bad)])
        assert result.exit_code == EXIT_PARSE
        assert "line" in result.output


class TestReproduce:
    def test_table1_stdout(self) -> None:
        result = runner.invoke(app, ["--out", "-", "--grid", "200x200", "reproduce", "table1"])
        assert result.exit_code == 0, result.output
        rows = csv_rows(result.output)
        assert [r["instance_id"] for r in rows][:2] == ["J6_3_1", "J8_4_1"]
        assert len(rows) == 6
        assert f"# cutbench {__version__} seed=20240101 grid=200x200" in result.output

    def test_appendix_file(self, tmp_path: Path) -> None:
        out = tmp_path / "sweep.csv"
        args = ["--out", str(out), "--grid", "100x100", "reproduce", "appendix-a", "--max-m", "12"]
        result = runner.invoke(app, args)
        assert result.exit_code == 0, result.output
        rows = csv_rows(out.read_text())
        assert [(int(r["m"]), int(r["b"])) for r in rows] == [
            (6, 1), (8, 1), (10, 1), (10, 2), (12, 1), (12, 2),
        ]
        assert out.read_text().splitlines()[-1].startswith("# cutbench")

    def test_unknown_target(self) -> None:
        result = runner.invoke(app, ["reproduce", "table9"])
        assert result.exit_code == 2


class TestStatsAndSpectra:
    def test_stats(self, j631_file: Path) -> None:
        result = runner.invoke(app, ["--out", "-", "stats", str(j631_file)])
        assert result.exit_code == 0, result.output
        (row,) = csv_rows(result.output)
        assert (row["kind"], float(row["lower"]), int(row["count"])) == ("degree", 9.0, 20)

    def test_stats_terminal(self, j631_file: Path) -> None:
        result = runner.invoke(app, ["stats", str(j631_file), "--weight-hist", "--bins", "4"])
        assert result.exit_code == 0, result.output

    def test_spectra(self) -> None:
        args = ["--out", "-", "spectra", "--family", "karloff", "--m", "6", "--b", "1"]
        result = runner.invoke(app, args)
        assert result.exit_code == 0, result.output
        spectrum = [(float(r["eigenvalue"]), int(r["multiplicity"])) for r in csv_rows(result.output)]
        assert [k for _, k in spectrum] == [5, 9, 5, 1]
        assert [v for v, _ in spectrum] == pytest.approx([-3.0, -1.0, 3.0, 9.0])

    def test_spectra_jacobi_terminal(self, j631_file: Path) -> None:
        result = runner.invoke(app, ["spectra", str(j631_file), "--method", "jacobi"])
        assert result.exit_code == 0, result.output

    def test_spectra_bad_method(self, j631_file: Path) -> None:
        result = runner.invoke(app, ["spectra", str(j631_file), "--method", "qr"])
        assert result.exit_code == 1


class TestExitCodes:
    def test_certification_code(self) -> None:
        assert exit_code_for(CertificationError("cut above bound")) == EXIT_CERTIFICATION
        assert exit_code_for(OSError("disk")) == 1

    def test_bad_format(self) -> None:
        result = runner.invoke(app, ["--format", "xml", "version"])
        assert result.exit_code == 2

    def test_parse_and_usage_errors_share_code(self, tmp_path: Path) -> None:
        bad = tmp_path / "bad.el"
        bad.write_text("3 2\n1 2\n")
        parse = runner.invoke(app, ["analyze", str(bad)])
        usage = runner.invoke(app, ["analyze", "--no-such-flag"])
        assert parse.exit_code == usage.exit_code == EXIT_PARSE

"""Rich terminal output utilities for the cutbench CLI."""
from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path
from typing import Any

from rich import box
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from cutbench.core.models import Graph
from cutbench.gw.rounding import RoundingStats
from cutbench.reports.schemas import (
    ApproxReportSchema,
    HistogramRowSchema,
    SpectrumRowSchema,
    SweepRowSchema,
)

console = Console()
err_console = Console(stderr=True)


def _fmt(value: float | None, spec: str = ".4f") -> str:
    return "-" if value is None else format(value, spec)


def print_error(message: str) -> None:
    """Print an error message in red on stderr."""
    err_console.print(f"[bold red]error:[/bold red] {message}")


def print_reports(rows: Sequence[ApproxReportSchema], title: str = "cutbench") -> None:
    """Print analysis rows as a table, then any warnings."""
    table = Table(title=title, box=box.ROUNDED)
    for name in ("Instance", "n", "|E|", "deg", "Max-Cut", "Status", "GW HP", "α_GW", "F1", "α_QAOA"):
        table.add_column(name, justify="left" if name in ("Instance", "Status") else "right")
    for r in rows:
        table.add_row(
            r.instance_id,
            str(r.n),
            str(r.edges),
            "-" if r.degree is None else str(r.degree),
            _fmt(r.maxcut_value, ".6g"),
            r.maxcut_status or "-",
            _fmt(r.gw_hp),
            _fmt(r.gw_ratio),
            _fmt(r.qaoa_f1),
            _fmt(r.qaoa_ratio),
        )
    console.print(table)
    for r in rows:
        for w in r.warnings:
            console.print(f"[yellow]⚠ {r.instance_id}: {w}[/yellow]")


def print_rounding(instance_id: str, stats: RoundingStats) -> None:
    """Print Monte Carlo rounding statistics."""
    console.print(
        f"{instance_id}: {stats.samples} roundings, mean {stats.mean:.4f} "
        f"± {stats.stderr:.4f} (stderr), best {stats.best_value:g}"
    )


def print_sweep(rows: Sequence[SweepRowSchema]) -> None:
    """Print the Karloff sweep."""
    table = Table(title="Karloff sweep", box=box.SIMPLE)
    for name in ("m", "b", "r", "α_GW", "α_QAOA", "limit", "triangle-free"):
        table.add_column(name, justify="right")
    for r in rows:
        table.add_row(
            str(r.m),
            str(r.b),
            f"{r.r:.4f}",
            f"{r.alpha_gw:.4f}",
            f"{r.alpha_qaoa:.4f}",
            f"{r.alpha_qaoa_limit:.4f}",
            "yes" if r.triangle_free else "no",
        )
    console.print(table)


def print_stats(summary: dict[str, Any], histogram: Sequence[HistogramRowSchema]) -> None:
    """Print instance statistics and histograms."""
    table = Table(title="Instance statistics", box=box.ROUNDED)
    table.add_column("Metric", style="cyan")
    table.add_column("Value", style="bold")
    for key, value in summary.items():
        table.add_row(key, "-" if value is None else str(value))
    console.print(table)
    if histogram:
        hist = Table(title="Histogram", box=box.SIMPLE)
        for name in ("kind", "lower", "upper", "count"):
            hist.add_column(name, justify="right")
        for h in histogram:
            hist.add_row(h.kind, f"{h.lower:g}", f"{h.upper:g}", str(h.count))
        console.print(hist)


def print_spectrum(rows: Sequence[SpectrumRowSchema], checks: Sequence[tuple[str, float, float]]) -> None:
    """Print distinct eigenvalues and comparisons with closed forms."""
    table = Table(title="Adjacency spectrum", box=box.SIMPLE)
    table.add_column("eigenvalue", justify="right")
    table.add_column("multiplicity", justify="right")
    for r in rows:
        table.add_row(f"{r.eigenvalue:.10g}", str(r.multiplicity))
    console.print(table)
    for name, expected, found in checks:
        ok = abs(expected - found) <= 1e-6 * max(1.0, abs(expected))
        color = "green" if ok else "red"
        console.print(
            f"[{color}]{name}: closed form {expected:.10g}, numerical {found:.10g}[/{color}]"
        )


def print_generated(path: Path, g: Graph, meta_file: Path) -> None:
    """Confirm a generated instance."""
    console.print(
        Panel(
            f"{g.n} vertices, {g.num_edges} edges\n{path}\n{meta_file}",
            title="Generated",
            border_style="green",
        )
    )

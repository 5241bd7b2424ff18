"""CLI command: cutbench stats."""
from __future__ import annotations

from pathlib import Path
from typing import Any

import typer

from cutbench.cli.context import emit_rows, get_state, handle_errors
from cutbench.core.errors import DomainError
from cutbench.core.models import Graph
from cutbench.reports.schemas import HistogramRowSchema


def instance_summary(g: Graph) -> dict[str, Any]:
    """n, |E|, total weight, sign and magnitude facts about an instance."""
    from cutbench.graphs.queries import (
        check_regular,
        has_negative_weight,
        is_triangle_free,
        magnitude_range,
    )

    try:
        spread: float | None = magnitude_range(g)
    except DomainError:
        spread = None
    return {
        "n": g.n,
        "edges": g.num_edges,
        "total_weight": g.total_weight,
        "unit_weight": g.is_unit_weight,
        "has_negative": has_negative_weight(g),
        "magnitude_range": spread,
        "regular_degree": check_regular(g),
        "triangle_free": is_triangle_free(g),
    }


def histogram_rows(g: Graph, weight_bins: int | None) -> list[HistogramRowSchema]:
    """Degree histogram, plus a weight histogram when ``weight_bins`` is set."""
    from cutbench.graphs.queries import degree_histogram, weight_histogram

    rows = [
        HistogramRowSchema(kind="degree", lower=d, upper=d, count=c)
        for d, c in degree_histogram(g)
    ]
    if weight_bins is not None:
        rows.extend(
            HistogramRowSchema(kind="weight", lower=lo, upper=hi, count=c)
            for lo, hi, c in weight_histogram(g, weight_bins)
        )
    return rows


def stats_cmd(
    ctx: typer.Context,
    path: Path = typer.Argument(..., help="Instance file (edge list or graph6)"),
    weight_hist: bool = typer.Option(False, "--weight-hist", help="Add an edge-weight histogram"),
    bins: int = typer.Option(20, help="Weight histogram bins"),
) -> None:
    """Summarize an instance: size, weights and degree histogram."""
    from cutbench.cli.output import print_stats
    from cutbench.graphs.io import read_graph

    state = get_state(ctx)
    with handle_errors():
        g = read_graph(path)
        summary = instance_summary(g)
        rows = histogram_rows(g, bins if weight_hist else None)
        if state.out is not None:
            typer.echo(" ".join(f"{k}={v}" for k, v in summary.items()), err=True)
        if emit_rows(state, rows):
            return
    print_stats(summary, rows)

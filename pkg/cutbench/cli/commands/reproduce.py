"""CLI command: cutbench reproduce."""
from __future__ import annotations

from enum import StrEnum
from pathlib import Path

import typer

from cutbench.cli.context import emit_rows, get_state, handle_errors


class Target(StrEnum):
    """Reproducible tables."""

    TABLE1 = "table1"
    TABLE2 = "table2"
    TABLE3 = "table3"
    APPENDIX_A = "appendix-a"


def reproduce_cmd(
    ctx: typer.Context,
    target: Target = typer.Argument(..., help="Which table to reproduce"),
    max_m: int = typer.Option(60, help="Largest m for appendix-a (300 for the full sweep)"),
    fine: bool = typer.Option(False, "--fine", help="Use the 5000x5000 QAOA grid"),
    verify: bool = typer.Option(False, "--verify", help="Regenerate small instances and check counts"),
    srg_dir: Path | None = typer.Option(None, help="Directory of SRG(40,12,2,4) files for table3"),
    restarts: int = typer.Option(100, help="Tabu search restarts for table3 files"),
) -> None:
    """Reproduce a published ratio table as CSV."""
    from cutbench.cli.output import print_reports, print_sweep
    from cutbench.core.config import GridSpec, LocalSearchConfig
    from cutbench.experiments import tables

    state = get_state(ctx)
    grid = GridSpec.fine() if fine else state.grid
    with handle_errors():
        if target is Target.APPENDIX_A:
            sweep = tables.appendix_a(max_m, grid)
            if not emit_rows(state, sweep, grid=grid):
                print_sweep(sweep)
            return
        if target is Target.TABLE1:
            rows = tables.table1(grid, verify=verify)
        elif target is Target.TABLE2:
            rows = tables.table2(grid)
        else:
            search = LocalSearchConfig(restarts=restarts, seed=state.seed)
            rows = tables.table3(grid, srg_dir=srg_dir, search=search)
        if emit_rows(state, rows, grid=grid):
            return
    print_reports(rows, title=f"Reproduction: {target.value}")

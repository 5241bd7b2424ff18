"""Global CLI options and error-to-exit-code mapping."""
from __future__ import annotations

from collections.abc import Iterator, Sequence
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path

import typer
from pydantic import BaseModel

from cutbench.core.config import GridSpec
from cutbench.core.errors import (
    BudgetExceededError,
    CertificationError,
    GraphParseError,
)
from cutbench.core.rng import DEFAULT_SEED
from cutbench.experiments.report import OutputFormat, Provenance, TableReport

# Click reports usage errors (unknown option, bad choice) with 2 as well, so
# exit code 2 means the input could not be read, either the command line or
# an instance file.
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_CERTIFICATION = 4


@dataclass
class CliState:
    """Options given before the command name."""

    seed: int = DEFAULT_SEED
    grid: GridSpec = field(default_factory=GridSpec)
    jobs: int = 1
    out: Path | None = None
    fmt: OutputFormat = "csv"
    verbose: bool = False

    def provenance(self, grid: GridSpec | None = None) -> Provenance:
        """Provenance record for this invocation."""
        return Provenance(seed=self.seed, grid=(grid or self.grid).label)


def get_state(ctx: typer.Context) -> CliState:
    """The CliState installed by the root callback (defaults when absent)."""
    obj = ctx.find_object(CliState)
    return obj if obj is not None else CliState()


def exit_code_for(exc: BaseException) -> int:
    """Process exit code for an error raised by a command."""
    if isinstance(exc, GraphParseError):
        return EXIT_PARSE
    if isinstance(exc, BudgetExceededError):
        return EXIT_BUDGET
    if isinstance(exc, CertificationError):
        return EXIT_CERTIFICATION
    return 1


@contextmanager
def handle_errors() -> Iterator[None]:
    """Turn cutbench, validation and I/O errors into a red message and an exit code."""
    from cutbench.cli.output import print_error

    try:
        yield
    except (ValueError, OSError) as exc:
        print_error(str(exc))
        raise typer.Exit(code=exit_code_for(exc)) from exc


def emit_rows(
    state: CliState,
    rows: Sequence[BaseModel],
    *,
    grid: GridSpec | None = None,
) -> bool:
    """
    Write rows to ``--out`` when given.

    ``--out -`` writes to stdout. Returns False when no output path was
    given, so the caller prints a terminal table instead.
    """
    if state.out is None:
        return False
    report = TableReport(rows, state.provenance(grid))
    if str(state.out) == "-":
        typer.echo(report.render(state.fmt), nl=False)
    else:
        report.write(state.out, state.fmt)
        typer.echo(f"Wrote {len(rows)} rows to {state.out}", err=True)
    return True

"""cutbench CLI entrypoint."""
from __future__ import annotations

import logging
from pathlib import Path

import typer
from rich.logging import RichHandler

from cutbench import __version__
from cutbench.cli.commands.analyze import analyze_cmd
from cutbench.cli.commands.gen import app as gen_app
from cutbench.cli.commands.reproduce import reproduce_cmd
from cutbench.cli.commands.spectra import spectra_cmd
from cutbench.cli.commands.stats import stats_cmd
from cutbench.cli.context import CliState
from cutbench.cli.output import err_console
from cutbench.core.config import GridSpec
from cutbench.core.rng import DEFAULT_SEED

app = typer.Typer(
    name="cutbench",
    help="Hard Max-Cut instances and instance-specific GW / QAOA approximation ratios.",
    no_args_is_help=True,
)

app.add_typer(gen_app, name="gen")
app.command("analyze")(analyze_cmd)
app.command("reproduce")(reproduce_cmd)
app.command("stats")(stats_cmd)
app.command("spectra")(spectra_cmd)


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


def _parse_grid(text: str) -> GridSpec:
    try:
        return GridSpec.parse(text)
    except ValueError as exc:
        raise typer.BadParameter(str(exc)) from exc


@app.callback()
def main(
    ctx: typer.Context,
    seed: int = typer.Option(DEFAULT_SEED, min=0, help="Seed for every random stream"),
    grid: str = typer.Option("1000x1000", help="QAOA angle grid as GxB"),
    jobs: int = typer.Option(1, min=1, help="Instances analyzed in parallel"),
    out: Path | None = typer.Option(None, help="Output file ('-' for stdout)"),
    fmt: str = typer.Option("csv", "--format", help="Output format: csv or jsonl"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
) -> None:
    """Options shared by every command."""
    if fmt not in ("csv", "jsonl"):
        raise typer.BadParameter(f"format must be csv or jsonl, got {fmt!r}")
    _configure_logging(verbose)
    ctx.obj = CliState(
        seed=seed,
        grid=_parse_grid(grid),
        jobs=jobs,
        out=out,
        fmt=fmt,  # type: ignore[arg-type]
        verbose=verbose,
    )


@app.command()
def version() -> None:
    """Show cutbench version."""
    typer.echo(f"cutbench v{__version__}")


if __name__ == "__main__":
    app()

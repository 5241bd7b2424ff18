"""CLI command: cutbench gen."""
from __future__ import annotations

from pathlib import Path

import typer

from cutbench.cli.context import get_state, handle_errors

app = typer.Typer(help="Generate Max-Cut instances with a provenance sidecar.", no_args_is_help=True)


@app.command("karloff")
def karloff_cmd(
    ctx: typer.Context,
    m: int = typer.Option(..., help="Ground-set size (even)"),
    b: int = typer.Option(..., help="Required intersection size"),
    force: bool = typer.Option(False, "--force", help="Generate even when b >= m/4"),
) -> None:
    """Generate the Karloff graph J(m, m/2, b)."""
    from cutbench.cli.output import print_generated
    from cutbench.families import get_family
    from cutbench.graphs.io import write_edge_list, write_meta

    state = get_state(ctx)
    with handle_errors():
        family = get_family("karloff", {"m": m, "b": b, "force": force})
        g = family.generate()
        path = state.out or Path(f"J{m}_{m // 2}_{b}.el")
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(write_edge_list(g))
        meta_file = write_meta(path, family.meta(g))
    print_generated(path, g, meta_file)


@app.command("perturb")
def perturb_cmd(
    ctx: typer.Context,
    in_path: Path = typer.Option(..., "--in", help="Source instance (edge list or graph6)"),
    sigma: float = typer.Option(0.1, help="Standard deviation of the weight noise"),
    seed: int | None = typer.Option(None, help="PRNG seed (defaults to the global --seed)"),
) -> None:
    """Redraw every edge weight of an instance as 1 + sigma * N(0, 1)."""
    from cutbench.cli.output import print_generated
    from cutbench.families import get_family
    from cutbench.graphs.io import read_graph, write_edge_list, write_meta

    state = get_state(ctx)
    seed = state.seed if seed is None else seed
    with handle_errors():
        source = read_graph(in_path)
        family = get_family(
            "perturb", {"sigma": sigma, "seed": seed, "source_label": in_path.name}
        )
        g = family.generate(source)
        path = state.out or Path(f"{in_path.stem}_sigma{sigma:g}_seed{seed}.el")
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(write_edge_list(g))
        meta_file = write_meta(path, family.meta(g))
    print_generated(path, g, meta_file)

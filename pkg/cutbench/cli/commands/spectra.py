"""CLI command: cutbench spectra."""
from __future__ import annotations

from pathlib import Path

import typer

from cutbench.cli.context import emit_rows, get_state, handle_errors
from cutbench.core.errors import IncompatibleOptionsError
from cutbench.core.models import Graph, KarloffParams


def closed_form_checks(
    g: Graph, values: list[tuple[float, int]], karloff: KarloffParams | None
) -> list[tuple[str, float, float]]:
    """``(name, closed form, numerical)`` triples for the known spectra."""
    from cutbench.families.karloff import karloff_min_eigenvalue
    from cutbench.families.srg import srg_eigenvalues
    from cutbench.graphs.queries import check_srg

    checks: list[tuple[str, float, float]] = []
    if not values:
        return checks
    smallest, largest = values[0][0], values[-1][0]
    if karloff is not None and karloff.in_formula_range:
        checks.append(("min eigenvalue", float(karloff_min_eigenvalue(karloff)), smallest))
    srg = check_srg(g) if g.is_unit_weight else None
    if srg is not None and len(values) >= 3:
        xi1, xi2 = srg_eigenvalues(srg)
        checks.append(("k", float(srg.k), largest))
        checks.append(("xi1", xi1, values[-2][0]))
        checks.append(("xi2", xi2, smallest))
    return checks


def spectra_cmd(
    ctx: typer.Context,
    path: Path | None = typer.Argument(None, help="Instance file (edge list or graph6)"),
    family: str | None = typer.Option(None, help="Use a generated family instead of a file"),
    m: int | None = typer.Option(None, help="Karloff ground-set size"),
    b: int | None = typer.Option(None, help="Karloff intersection size"),
    method: str = typer.Option("lapack", help="Eigensolver: lapack or jacobi"),
    cluster_tol: float = typer.Option(1e-6, help="Eigenvalues closer than this are merged"),
) -> None:
    """Distinct adjacency eigenvalues with multiplicities, checked against closed forms."""
    from cutbench.cli.output import print_spectrum
    from cutbench.families.karloff import karloff_generate
    from cutbench.graphs.io import read_graph, read_meta
    from cutbench.reports.schemas import SpectrumRowSchema
    from cutbench.spectral.eigen import distinct_eigenvalues, symmetric_eigen

    state = get_state(ctx)
    with handle_errors():
        if method not in ("lapack", "jacobi"):
            raise IncompatibleOptionsError(f"method must be lapack or jacobi, got {method!r}")
        karloff = None
        if path is not None:
            g = read_graph(path)
            meta = read_meta(path)
            if meta is not None and meta.family == "karloff" and {"m", "b"} <= set(meta.params):
                karloff = KarloffParams(m=int(meta.params["m"]), b=int(meta.params["b"]))
        elif family == "karloff" and m is not None and b is not None:
            karloff = KarloffParams(m=m, b=b)
            g = karloff_generate(karloff)
        else:
            raise IncompatibleOptionsError("give an instance file or --family karloff --m M --b B")
        spectrum = symmetric_eigen(g.adjacency_matrix(), method=method)  # type: ignore[arg-type]
        values = distinct_eigenvalues(spectrum, cluster_tol)
        rows = [SpectrumRowSchema(eigenvalue=v, multiplicity=k) for v, k in values]
        if emit_rows(state, rows):
            return
    print_spectrum(rows, closed_form_checks(g, values, karloff))

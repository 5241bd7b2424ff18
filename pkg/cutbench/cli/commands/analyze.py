"""CLI command: cutbench analyze."""
from __future__ import annotations

from pathlib import Path

import typer

from cutbench.cli.context import get_state, handle_errors
from cutbench.core.config import ANALYSES, AnalysisConfig, BMOptions, LocalSearchConfig
from cutbench.core.errors import IncompatibleOptionsError
from cutbench.core.models import KarloffParams
from cutbench.experiments.engine import Instance

DEFAULT_ANALYSES = ",".join(AnalysisConfig().analyses)


def _parse_analyses(text: str) -> tuple[str, ...]:
    names = tuple(a.strip() for a in text.split(",") if a.strip())
    unknown = [a for a in names if a not in ANALYSES]
    if unknown:
        raise typer.BadParameter(f"unknown analyses {unknown}; choose from {list(ANALYSES)}")
    return names


def _file_instances(path: Path) -> list[Instance]:
    from cutbench.graphs.io import read_graphs, read_meta

    meta = read_meta(path)
    karloff = None
    family, params = "file", ""
    if meta is not None:
        family = meta.family
        params = " ".join(f"{k}={v}" for k, v in meta.params.items())
        if meta.family == "karloff" and {"m", "b"} <= set(meta.params):
            karloff = KarloffParams(m=int(meta.params["m"]), b=int(meta.params["b"]))
    graphs = read_graphs(path)
    return [
        Instance(
            graph=g,
            instance_id=path.stem if len(graphs) == 1 else f"{path.stem}-{i}",
            family=family,
            params=params,
            karloff=karloff,
            meta=meta,
        )
        for i, g in enumerate(graphs)
    ]


def _family_instance(family: str, m: int | None, b: int | None, budget: int) -> Instance:
    from cutbench.families.karloff import karloff_generate

    if family != "karloff":
        raise IncompatibleOptionsError(f"only --family karloff can be analyzed without a file, got {family!r}")
    if m is None or b is None:
        raise IncompatibleOptionsError("--family karloff needs --m and --b")
    p = KarloffParams(m=m, b=b)
    return Instance(
        graph=karloff_generate(p, budget),
        instance_id=f"J{m}_{m // 2}_{b}",
        family="karloff",
        params=f"m={m} b={b}",
        karloff=p,
    )


def analyze_cmd(
    ctx: typer.Context,
    paths: list[Path] | None = typer.Argument(None, help="Instance files (edge list or graph6)"),
    family: str | None = typer.Option(None, help="Analyze a generated family instead of files"),
    m: int | None = typer.Option(None, help="Karloff ground-set size"),
    b: int | None = typer.Option(None, help="Karloff intersection size"),
    analyses: str = typer.Option(DEFAULT_ANALYSES, help="Comma-separated analyses to run"),
    restarts: int = typer.Option(100, help="Tabu search restarts"),
    bm_rank: int | None = typer.Option(None, help="Factor width for gw-bm"),
    rounding_samples: int = typer.Option(0, help="Monte Carlo roundings to sample"),
) -> None:
    """Compute instance-specific GW and QAOA ratios for instances."""
    from cutbench.cli.context import emit_rows
    from cutbench.cli.output import print_reports, print_rounding
    from cutbench.experiments.engine import Analyzer

    state = get_state(ctx)
    selected = _parse_analyses(analyses)
    with handle_errors():
        config = AnalysisConfig(
            analyses=selected,
            seed=state.seed,
            grid=state.grid,
            bm=BMOptions(seed=state.seed, rank=bm_rank),
            local_search=LocalSearchConfig(restarts=restarts, seed=state.seed),
            rounding_samples=rounding_samples,
        )
        if paths and family:
            raise IncompatibleOptionsError("give instance files or --family, not both")
        if paths:
            instances = [inst for path in paths for inst in _file_instances(path)]
        elif family:
            instances = [_family_instance(family, m, b, config.budgets.vertex_budget)]
        else:
            raise IncompatibleOptionsError("nothing to analyze: give instance files or --family")
        reports = list(Analyzer(config).analyze_many(instances, jobs=state.jobs))
        rows = [r.to_schema() for r in reports]
        if emit_rows(state, rows):
            return
    print_reports(rows, title="Analysis")
    for r in reports:
        if r.rounding is not None:
            print_rounding(r.instance_id, r.rounding)

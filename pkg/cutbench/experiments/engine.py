"""Analysis engine: runs the configured analyses on one instance."""
from __future__ import annotations

import logging
import time
from collections.abc import Iterable, Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any

from cutbench.core.config import AnalysisConfig
from cutbench.core.errors import BudgetExceededError, DomainError, IncompatibleOptionsError
from cutbench.core.models import Embedding, Graph, KarloffParams, MaxCutResult, SrgParams
from cutbench.families.karloff import (
    karloff_common_neighbors,
    karloff_degree,
    karloff_edge_count,
    karloff_maxcut,
    karloff_vertex_count,
)
from cutbench.families.srg import srg_zp_star
from cutbench.graphs.io import sidecar_warnings
from cutbench.graphs.queries import check_regular, check_srg, is_primitive
from cutbench.gw.embeddings import karloff_embedding, srg_embedding
from cutbench.gw.report import GwReport, gw_report, karloff_gw_report, srg_gw_report
from cutbench.gw.rounding import RoundingStats, monte_carlo_rounding
from cutbench.gw.sdp import bm_solve
from cutbench.maxcut import get_solver
from cutbench.maxcut.certify import certify, integral_bound
from cutbench.qaoa.analytic import triangle_free_angles
from cutbench.qaoa.grid import grid_search, karloff_f1
from cutbench.qaoa.report import QaoaReport, qaoa_report
from cutbench.qaoa.statevector import StatevectorSimulator, statevector_search
from cutbench.reports.schemas import ApproxReportSchema, InstanceMeta

logger = logging.getLogger("cutbench.experiments")

_SIMULATOR_AGREEMENT = 1e-9


@dataclass
class Instance:
    """A graph plus what is known about where it came from."""

    graph: Graph
    instance_id: str
    family: str = "file"
    params: str = ""
    karloff: KarloffParams | None = None
    meta: InstanceMeta | None = None


@dataclass
class ApproxReport:
    """Everything the Analyzer learned about one instance."""

    instance_id: str
    family: str
    params: str
    n: int
    edges: int
    degree: int | None = None
    maxcut: MaxCutResult | None = None
    maxcut_value: float | None = None
    maxcut_status: str | None = None
    maxcut_bound: Fraction | float | None = None
    gw: GwReport | None = None
    rounding: RoundingStats | None = None
    qaoa: QaoaReport | None = None
    seconds: float = 0.0
    warnings: list[str] = field(default_factory=list)

    def warn(self, message: str) -> None:
        """Record a warning on the report and log it."""
        logger.warning("%s: %s", self.instance_id, message)
        self.warnings.append(message)

    def to_schema(self) -> ApproxReportSchema:
        """Flatten into the validated row schema."""
        mc = self.maxcut_value
        gw_hp = self.gw.hp if self.gw else None
        f1 = self.qaoa.f1 if self.qaoa else None
        return ApproxReportSchema(
            instance_id=self.instance_id,
            family=self.family,
            params=self.params,
            n=self.n,
            edges=self.edges,
            degree=self.degree,
            maxcut_value=mc,
            maxcut_bound=None if self.maxcut_bound is None else float(self.maxcut_bound),
            maxcut_status=self.maxcut_status,  # type: ignore[arg-type]
            gw_hp=gw_hp,
            gw_ratio=gw_hp / mc if gw_hp is not None and mc else None,
            gw_certificate=(
                self.gw.certificate.summary() if self.gw and self.gw.certificate else None
            ),
            qaoa_f1=f1,
            qaoa_gamma=self.qaoa.angles.gamma if self.qaoa else None,
            qaoa_beta=self.qaoa.angles.beta if self.qaoa else None,
            qaoa_ratio=f1 / mc if f1 is not None and mc else None,
            seconds=self.seconds,
            warnings=list(self.warnings),
        )


@dataclass
class _Structure:
    degree: int | None
    srg: SrgParams | None
    karloff: KarloffParams | None


class Analyzer:
    """
    Runs the analyses named in an AnalysisConfig on instances.

    Each analysis is skipped with a recorded warning when the instance is
    over its budget or outside its domain; only a statevector request on an
    oversized graph is an error, since nothing else can stand in for it.
    """

    def __init__(self, config: AnalysisConfig | None = None) -> None:
        """
        Initialize the analyzer.

        Args:
            config: Analyses and settings. Defaults to AnalysisConfig().
        """
        self.config = config or AnalysisConfig()
        self.config.validate()

    def _structure(self, inst: Instance, report: ApproxReport) -> _Structure:
        g = inst.graph
        degree = check_regular(g)
        srg = None
        if degree is not None and g.is_unit_weight:
            if g.n <= self.config.budgets.dense_eigen_budget:
                found = check_srg(g)
                if found is not None and is_primitive(g):
                    srg = found
        karloff = inst.karloff
        if karloff is not None:
            if (g.n, g.num_edges) != (karloff_vertex_count(karloff), karloff_edge_count(karloff)):
                report.warn(f"instance does not match {karloff.label}; closed forms disabled")
                karloff = None
            elif not karloff.in_formula_range:
                report.warn(f"{karloff.label} has b >= m/4; closed forms disabled")
                karloff = None
        return _Structure(degree=degree, srg=srg, karloff=karloff)

    def _solve(self, solver_name: str, g: Graph) -> MaxCutResult:
        params: dict[str, Any]
        if solver_name == "brute":
            params = {"max_vertices": self.config.budgets.brute_force_vertices}
        else:
            params = asdict(self.config.local_search)
        solver = get_solver(solver_name, params)
        logger.debug("maxcut via %s: %s", solver.name, solver.description)
        return solver.solve(g)

    def _maxcut(self, g: Graph, report: ApproxReport, st: _Structure) -> None:
        cfg, budgets = self.config, self.config.budgets
        result: MaxCutResult | None = None
        if cfg.wants("maxcut-brute"):
            if g.n <= budgets.brute_force_vertices:
                result = self._solve("brute", g)
            else:
                report.warn(
                    f"maxcut-brute skipped: n={g.n} exceeds {budgets.brute_force_vertices}"
                )
        # an oversized brute-force request falls back to tabu unless a closed form exists
        fallback = result is None and st.karloff is None and cfg.wants("maxcut-brute")
        if cfg.wants("maxcut-tabu") or fallback:
            heuristic = self._solve("tabu", g)
            if result is not None and heuristic.value > result.value + 1e-9:
                report.warn(f"tabu cut {heuristic.value} beats brute force {result.value}")
            result = result or heuristic

        if result is None:
            if st.karloff is not None:
                report.maxcut_value = float(karloff_maxcut(st.karloff))
                report.maxcut_status = "closed-form"
            return
        report.maxcut = result
        report.maxcut_value = result.value
        report.maxcut_status = result.status.value

    def _bound(self, report: ApproxReport, st: _Structure) -> Fraction | float | None:
        if st.karloff is not None:
            return karloff_maxcut(st.karloff)
        if st.srg is not None:
            return srg_zp_star(st.srg)
        cert = report.gw.certificate if report.gw else None
        if cert is not None and cert.certified:
            return cert.feasible_dual_value
        return None

    def _certify(self, g: Graph, report: ApproxReport, st: _Structure) -> None:
        if report.maxcut is None:
            return
        bound = self._bound(report, st)
        if bound is None:
            report.warn("certify skipped: no upper bound available")
            return
        if isinstance(bound, float) and all(float(w).is_integer() for _, _, w in g.edges):
            bound = integral_bound(bound)
        certified = certify(g, report.maxcut, bound)
        report.maxcut = certified
        report.maxcut_bound = bound
        report.maxcut_status = certified.status.value

    def _gw(self, g: Graph, report: ApproxReport, st: _Structure) -> None:
        cfg, budgets = self.config, self.config.budgets
        embedding: Embedding | None = None
        if cfg.wants("gw-analytic"):
            if st.karloff is not None:
                report.gw = karloff_gw_report(st.karloff)
                if cfg.rounding_samples:
                    embedding = karloff_embedding(st.karloff, budgets.vertex_budget)
            elif st.srg is not None:
                report.gw = srg_gw_report(st.srg)
                if cfg.rounding_samples:
                    embedding = srg_embedding(g, budget=budgets.dense_eigen_budget)
            else:
                report.warn("gw-analytic skipped: instance is neither Karloff nor a primitive SRG")
        if cfg.wants("gw-bm"):
            if g.n > budgets.bm_budget:
                report.warn(f"gw-bm skipped: n={g.n} exceeds {budgets.bm_budget}")
            else:
                emb, cert = bm_solve(g, cfg.bm, budget=budgets.bm_budget)
                if not cert.certified:
                    report.warn(f"gw-bm result uncertified ({cert.summary()})")
                if report.gw is None:
                    report.gw = gw_report(g, emb, certificate=cert)
                    embedding = emb
                else:
                    report.gw.certificate = cert
        if embedding is not None and cfg.rounding_samples:
            report.rounding = monte_carlo_rounding(g, embedding, cfg.rounding_samples, cfg.seed)

    def _qaoa(self, g: Graph, report: ApproxReport, st: _Structure) -> None:
        cfg, budgets = self.config, self.config.budgets
        if cfg.wants("qaoa-grid"):
            if st.karloff is not None and karloff_common_neighbors(st.karloff) == 0:
                angles = triangle_free_angles(karloff_degree(st.karloff), g.num_edges)
                report.qaoa = qaoa_report(angles, method="closed-form")
            elif st.karloff is not None:
                report.qaoa = qaoa_report(karloff_f1(st.karloff, cfg.grid))
            elif g.is_unit_weight:
                report.qaoa = qaoa_report(grid_search(g, cfg.grid))
            else:
                report.warn("qaoa-grid skipped: weighted graph (use qaoa-statevector)")
        if cfg.wants("qaoa-statevector"):
            if g.n > budgets.statevector_qubits:
                raise IncompatibleOptionsError(
                    f"qaoa-statevector needs n <= {budgets.statevector_qubits}, got n={g.n}"
                )
            if report.qaoa is not None:
                sim = StatevectorSimulator(g, budgets.statevector_qubits)
                exact = sim.expectation(report.qaoa.angles.gamma, report.qaoa.angles.beta)
                if abs(exact - report.qaoa.f1) > _SIMULATOR_AGREEMENT * max(1.0, exact):
                    report.warn(
                        f"per-edge F1 {report.qaoa.f1:.12g} disagrees with simulator {exact:.12g}"
                    )
            else:
                report.qaoa = qaoa_report(statevector_search(
                    g, max_qubits=budgets.statevector_qubits
                ), method="statevector")

    def analyze(self, inst: Instance) -> ApproxReport:
        """
        Analyze one instance.

        Returns:
            ApproxReport with every requested analysis that applied.

        Raises:
            IncompatibleOptionsError: If qaoa-statevector is requested on a
                graph over the qubit budget.
            CertificationError: If a cut exceeds its upper bound.
        """
        g = inst.graph
        start = time.perf_counter()
        report = ApproxReport(
            instance_id=inst.instance_id,
            family=inst.family,
            params=inst.params,
            n=g.n,
            edges=g.num_edges,
        )
        if inst.meta is not None:
            report.warnings.extend(sidecar_warnings(g, inst.meta))
        st = self._structure(inst, report)
        report.degree = st.degree

        self._maxcut(g, report, st)
        try:
            self._gw(g, report, st)
        except (BudgetExceededError, DomainError) as exc:
            report.warn(f"gw analysis skipped: {exc}")
        if self.config.wants("certify"):
            self._certify(g, report, st)
        self._qaoa(g, report, st)

        if report.maxcut_value == 0:
            report.warn("Max-Cut is 0; ratios omitted")
            report.maxcut_value = None
        if report.qaoa is not None and report.maxcut_value is not None:
            report.qaoa.maxcut = report.maxcut_value
        if report.gw is not None and report.maxcut_value is not None:
            report.gw.maxcut = report.maxcut_value
        report.seconds = time.perf_counter() - start
        logger.info("Analyzed %s in %.2fs", inst.instance_id, report.seconds)
        return report

    def analyze_many(self, instances: Iterable[Instance], jobs: int = 1) -> Iterator[ApproxReport]:
        """
        Analyze instances in input order.

        Args:
            instances: Instances to analyze.
            jobs: Worker threads; results still come back in input order.
        """
        if jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {jobs}")
        if jobs == 1:
            for inst in instances:
                yield self.analyze(inst)
            return
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            yield from pool.map(self.analyze, instances)

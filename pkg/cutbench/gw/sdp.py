"""
Low-rank solver for the Max-Cut SDP with a dual certificate.

The SDP ``max ½ Σ w_uv (1 - Y_uv)`` over unit-diagonal PSD matrices is
solved through a factorization Y = X Xᵀ with unit rows, optimized by
projected gradient ascent on the product of spheres. Optimality is then
certified from the stationarity multipliers: zeta_i = -(A X)_i · x_i,
shifted by the most negative eigenvalue of A + diag(zeta) so that the dual
objective (Σ w)/2 + ¼ Σ zeta' is a valid upper bound. A run whose gap closes
while the slack is still below -psd_tol keeps ascending with a tighter
gradient stop before a restart is tried.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from cutbench.core.config import BMOptions
from cutbench.core.errors import BudgetExceededError
from cutbench.core.models import Embedding, Graph, SdpCertificate
from cutbench.core.rng import make_rng
from cutbench.spectral.eigen import inf_norm, min_eigenvalue

logger = logging.getLogger("cutbench.gw")

DEFAULT_BM_BUDGET = 2000
_MAX_HALVINGS = 60
# Each refinement divides the gradient stop by _REFINE_FACTOR.
_REFINEMENTS = 3
_REFINE_FACTOR = 100.0


@dataclass
class _Ascent:
    x: np.ndarray
    value: float
    iterations: int
    grad_norm: float
    converged: bool


def dual_check(
    g: Graph,
    zeta: np.ndarray | list[float],
    primal: float | None = None,
    *,
    gap_tol: float | None = None,
    psd_tol: float | None = None,
) -> SdpCertificate:
    """
    Evaluate a dual vector without optimizing.

    Args:
        g: The graph.
        zeta: One multiplier per vertex.
        primal: Optional primal value to compare against.
        gap_tol: Duality-gap tolerance; default 1e-4 * max(1, primal).
        psd_tol: Largest accepted negative slack; default 1e-7 * ||A_w||_inf.

    Returns:
        Certificate with z_D = (Σ w)/2 + ¼ Σ zeta, the raw PSD slack
        lambda_min(A_w + diag(zeta)), and the dual value after shifting zeta
        by any negative slack. It is certified only when ``primal`` is given,
        the shifted gap is within ``gap_tol`` and the raw slack is at least
        ``-psd_tol``.

    Raises:
        ValueError: If ``zeta`` does not have one entry per vertex.
    """
    z = np.asarray(zeta, dtype=np.float64)
    if z.shape != (g.n,):
        raise ValueError(f"zeta must have {g.n} entries, got shape {z.shape}")
    dual_value = g.total_weight / 2 + math.fsum(z) / 4
    a = g.adjacency_matrix()
    slack = min_eigenvalue(a + np.diag(z))
    feasible = dual_value + g.n * max(0.0, -slack) / 4
    certified = False
    if primal is not None:
        tols = BMOptions(gap_tol=gap_tol, psd_tol=psd_tol)
        certified = (
            feasible - primal <= tols.gap_tol_for(primal)
            and slack >= -tols.psd_tol_for(inf_norm(a))
        )
    return SdpCertificate(
        primal_value=math.nan if primal is None else primal,
        dual_vector=z,
        dual_value=dual_value,
        min_eig_slack=slack,
        feasible_dual_value=feasible,
        certified=certified,
    )


def _objective(a: np.ndarray, x: np.ndarray, half_total: float) -> float:
    return half_total - float(np.sum((a @ x) * x)) / 4


def _normalize_rows(x: np.ndarray) -> np.ndarray:
    return x / np.linalg.norm(x, axis=1, keepdims=True)


def _ascend(
    a: np.ndarray,
    half_total: float,
    x: np.ndarray,
    opts: BMOptions,
    grad_stop: float,
) -> _Ascent:
    value = _objective(a, x, half_total)
    step = 1.0 / max(inf_norm(a), 1.0)
    grad_norm = math.inf
    for it in range(opts.max_iter):
        euclid = -0.5 * (a @ x)
        grad = euclid - np.sum(euclid * x, axis=1, keepdims=True) * x
        grad_sq = float(np.sum(grad * grad))
        grad_norm = math.sqrt(grad_sq)
        if grad_norm <= grad_stop:
            return _Ascent(x, value, it, grad_norm, True)
        for _ in range(_MAX_HALVINGS):
            candidate = _normalize_rows(x + step * grad)
            cand_value = _objective(a, candidate, half_total)
            if cand_value >= value + opts.armijo * step * grad_sq:
                break
            step /= 2
        else:
            logger.debug("Line search stalled at iteration %d (grad %.3e)", it, grad_norm)
            return _Ascent(x, value, it, grad_norm, False)
        x, value = candidate, cand_value
        step *= 2
    return _Ascent(x, value, opts.max_iter, grad_norm, False)


def _certificate(g: Graph, a: np.ndarray, x: np.ndarray, value: float, opts: BMOptions) -> SdpCertificate:
    zeta = -np.sum((a @ x) * x, axis=1)
    return dual_check(g, zeta, primal=value, gap_tol=opts.gap_tol_for(value), psd_tol=opts.psd_tol)


def _slack_only_failure(cert: SdpCertificate, opts: BMOptions, psd_tol: float) -> bool:
    """True when the gap is within tolerance but the PSD slack is not."""
    return (
        not cert.certified
        and cert.gap <= opts.gap_tol_for(cert.primal_value)
        and cert.min_eig_slack < -psd_tol
    )


def bm_solve(
    g: Graph,
    opts: BMOptions | None = None,
    *,
    budget: int = DEFAULT_BM_BUDGET,
) -> tuple[Embedding, SdpCertificate]:
    """
    Solve the Max-Cut SDP by low-rank factorization.

    Args:
        g: Weighted graph.
        opts: Solver options; rank defaults to ceil(sqrt(2n)) + 1.
        budget: Largest accepted vertex count.

    Returns:
        The best embedding found and its certificate. When no attempt is
        certified the best iterate is returned uncertified.

    Raises:
        BudgetExceededError: If ``g.n`` exceeds ``budget``.
    """
    opts = opts or BMOptions()
    opts.validate()
    if g.n > budget:
        raise BudgetExceededError(f"bm_solve on {g.n} vertices exceeds budget {budget}")
    a = g.adjacency_matrix()
    half_total = g.total_weight / 2
    grad_stop = opts.grad_tol * max(math.fsum(abs(w) for _, _, w in g.edges), 1.0)
    rank = opts.rank_for(g.n)
    psd_tol = opts.psd_tol_for(inf_norm(a))

    best: tuple[np.ndarray, SdpCertificate] | None = None
    for attempt in range(1 + opts.restarts):
        rng = make_rng(opts.seed + attempt)
        x0 = _normalize_rows(rng.standard_normal((g.n, rank)))
        run = _ascend(a, half_total, x0, opts, grad_stop)
        cert = _certificate(g, a, run.x, run.value, opts)
        stop = grad_stop
        for _ in range(_REFINEMENTS):
            if not (run.converged and _slack_only_failure(cert, opts, psd_tol)):
                break
            stop /= _REFINE_FACTOR
            logger.debug(
                "bm attempt %d: slack %.2e, refining to grad %.1e",
                attempt, cert.min_eig_slack, stop,
            )
            run = _ascend(a, half_total, run.x, opts, stop)
            cert = _certificate(g, a, run.x, run.value, opts)
        logger.debug(
            "bm attempt %d: zP=%.8f iters=%d grad=%.2e converged=%s %s",
            attempt, run.value, run.iterations, run.grad_norm, run.converged, cert.summary(),
        )
        if not run.converged:
            logger.warning("bm_solve did not converge within %d iterations", opts.max_iter)
        if best is None or cert.certified or (
            not best[1].certified and cert.primal_value > best[1].primal_value
        ):
            best = (run.x, cert)
        if cert.certified:
            break
        logger.warning("bm_solve attempt %d uncertified (gap %.3e)", attempt, cert.gap)
    assert best is not None
    return Embedding(vectors=best[0]), best[1]

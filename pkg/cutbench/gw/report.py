"""GW report fragments: expected rounding value and instance-specific ratio."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from cutbench.core.errors import DomainError
from cutbench.core.models import Embedding, Graph, KarloffParams, SdpCertificate, SrgParams
from cutbench.families.karloff import karloff_edge_count, karloff_maxcut, karloff_theta
from cutbench.families.srg import srg_zp_star
from cutbench.gw.embeddings import srg_edge_inner_product
from cutbench.gw.rounding import embedding_value, hp_expectation


@dataclass
class GwReport:
    """Hyperplane-rounding outcome for one instance."""

    hp: float
    z_p: float
    maxcut: float | None = None
    certificate: SdpCertificate | None = None

    @property
    def ratio(self) -> float | None:
        """HP / Max-Cut, when Max-Cut is known."""
        return None if self.maxcut is None else self.hp / self.maxcut

    @property
    def ratio_lower_bound(self) -> float:
        """HP / z_P, a lower bound on the ratio since Max-Cut <= z_P."""
        return self.hp / self.z_p if self.z_p else math.nan


def _check_maxcut(maxcut: float | Fraction | None) -> float | None:
    if maxcut is None:
        return None
    if maxcut == 0:
        raise DomainError("Max-Cut value is 0; ratio undefined")
    return float(maxcut)


def gw_report(
    g: Graph,
    e: Embedding,
    maxcut: float | Fraction | None = None,
    certificate: SdpCertificate | None = None,
) -> GwReport:
    """
    Evaluate an embedding on a graph.

    Args:
        g: The graph.
        e: SDP vectors, optimal or flagged heuristic by the caller.
        maxcut: Known Max-Cut value, if any.
        certificate: Optional SDP certificate to attach.

    Raises:
        DomainError: If ``maxcut`` is 0.
    """
    return GwReport(
        hp=hp_expectation(g, e),
        z_p=embedding_value(g, e),
        maxcut=_check_maxcut(maxcut),
        certificate=certificate,
    )


def karloff_gw_report(p: KarloffParams) -> GwReport:
    """Closed-form report for J(m, m/2, b) with 0 <= b < m/4."""
    edges = karloff_edge_count(p)
    maxcut = karloff_maxcut(p)
    hp = edges * karloff_theta(p) / math.pi
    z_p = edges * float(1 - (4 * p.r - 1)) / 2
    return GwReport(hp=hp, z_p=z_p, maxcut=_check_maxcut(maxcut))


def srg_gw_report(s: SrgParams, maxcut: float | Fraction | None = None) -> GwReport:
    """
    Closed-form report for a primitive SRG with the given parameters.

    Every edge meets at inner product xi2 / k, so HP = |E| arccos(xi2/k) / pi.
    """
    cos_theta = float(srg_edge_inner_product(s))
    hp = s.edge_count * math.acos(max(-1.0, min(1.0, cos_theta))) / math.pi
    return GwReport(hp=hp, z_p=float(srg_zp_star(s)), maxcut=_check_maxcut(maxcut))

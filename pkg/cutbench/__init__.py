"""
cutbench: hard Max-Cut instance families and instance-specific approximation ratios.

Quick start:
    from cutbench import KarloffParams
    from cutbench.families.karloff import karloff_generate, karloff_gw_ratio

    g = karloff_generate(KarloffParams(m=6, b=1))
    print(g.n, g.num_edges, karloff_gw_ratio(KarloffParams(m=6, b=1)))
"""
from cutbench.core.models import (
    CutAssignment,
    Embedding,
    Graph,
    KarloffParams,
    MaxCutResult,
    MaxCutStatus,
    QaoaAngles,
    SdpCertificate,
    SrgParams,
)

__version__ = "0.1.0"
__all__ = [
    "CutAssignment",
    "Embedding",
    "Graph",
    "KarloffParams",
    "MaxCutResult",
    "MaxCutStatus",
    "QaoaAngles",
    "SdpCertificate",
    "SrgParams",
]

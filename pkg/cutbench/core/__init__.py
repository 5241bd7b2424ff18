"""Core models, configuration and errors for cutbench."""
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

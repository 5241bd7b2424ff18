"""Report schemas for cutbench."""
from cutbench.reports.schemas import (
    ApproxReportSchema,
    HistogramRowSchema,
    InstanceMeta,
    SpectrumRowSchema,
    SweepRowSchema,
)

__all__ = [
    "ApproxReportSchema",
    "HistogramRowSchema",
    "InstanceMeta",
    "SpectrumRowSchema",
    "SweepRowSchema",
]

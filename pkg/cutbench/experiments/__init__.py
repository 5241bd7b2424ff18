"""Instance analysis and table reproduction."""
from cutbench.experiments.engine import Analyzer, ApproxReport, Instance
from cutbench.experiments.report import Provenance, TableReport
from cutbench.experiments.tables import appendix_a, table1, table2, table3

__all__ = [
    "Analyzer",
    "ApproxReport",
    "Instance",
    "Provenance",
    "TableReport",
    "appendix_a",
    "table1",
    "table2",
    "table3",
]

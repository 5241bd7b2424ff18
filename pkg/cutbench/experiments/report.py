"""CSV and JSON-lines output for report rows, with a provenance trailer."""
from __future__ import annotations

import csv
import io
import json
from collections.abc import Sequence
from dataclasses import dataclass, field
from datetime import UTC, datetime
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel

from cutbench import __version__

OutputFormat = Literal["csv", "jsonl"]


def _now_iso() -> str:
    return datetime.now(UTC).isoformat(timespec="seconds")


@dataclass
class Provenance:
    """Who produced a table, and with which settings."""

    seed: int
    grid: str
    version: str = __version__
    generated: str = field(default_factory=_now_iso)

    def line(self) -> str:
        """The trailing ``# cutbench ...`` comment."""
        return (
            f"# cutbench {self.version} seed={self.seed} grid={self.grid} "
            f"generated={self.generated}"
        )

    def to_dict(self) -> dict[str, Any]:
        """Provenance as a JSON-serializable dict."""
        return {
            "tool": "cutbench",
            "version": self.version,
            "seed": self.seed,
            "grid": self.grid,
            "generated": self.generated,
        }


def _row(model: BaseModel) -> dict[str, Any]:
    to_row = getattr(model, "to_row", None)
    return to_row() if callable(to_row) else model.model_dump()


class TableReport:
    """
    Serialize a list of pydantic rows.

    The CSV header is the model's field order, so it is stable for a given
    row type. Both formats end with the provenance record.
    """

    def __init__(self, rows: Sequence[BaseModel], provenance: Provenance) -> None:
        """
        Initialize the report.

        Args:
            rows: Rows of a single schema type.
            provenance: Trailer written after the rows.
        """
        self.rows = list(rows)
        self.provenance = provenance

    @property
    def header(self) -> list[str]:
        """Column names, empty when there are no rows."""
        return list(type(self.rows[0]).model_fields) if self.rows else []

    def to_csv(self) -> str:
        """Header, one line per row, then the provenance comment."""
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=self.header, lineterminator="\n")
        if self.rows:
            writer.writeheader()
            writer.writerows(_row(r) for r in self.rows)
        buf.write(self.provenance.line() + "\n")
        return buf.getvalue()

    def to_jsonl(self) -> str:
        """One JSON object per row, then ``{"provenance": {...}}``."""
        lines = [json.dumps(r.model_dump(mode="json")) for r in self.rows]
        lines.append(json.dumps({"provenance": self.provenance.to_dict()}))
        return "\n".join(lines) + "\n"

    def render(self, fmt: OutputFormat) -> str:
        """Text in the requested format."""
        if fmt == "csv":
            return self.to_csv()
        if fmt == "jsonl":
            return self.to_jsonl()
        raise ValueError(f"format must be 'csv' or 'jsonl', got {fmt!r}")

    def write(self, path: Path, fmt: OutputFormat) -> None:
        """
        Write the report to a file.

        Args:
            path: Output file path; parent directories are created.
            fmt: 'csv' or 'jsonl'.
        """
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.render(fmt))

"""Pydantic schemas for records that cross the CLI boundary."""
from __future__ import annotations

import math
from typing import Any, Literal

from pydantic import BaseModel, Field, field_validator, model_validator

MaxCutStatusLiteral = Literal["exact", "certified", "heuristic", "closed-form", "paper-sourced"]

_RESERVED_META_KEYS = ("family", "seed", "sigma", "source", "n", "edges", "tool_version")


class InstanceMeta(BaseModel):
    """Provenance written next to a generated instance as ``<basename>.meta``."""

    family: str
    params: dict[str, str] = Field(default_factory=dict)
    seed: int | None = Field(default=None, ge=0)
    sigma: float | None = Field(default=None, ge=0.0)
    source: str | None = None
    n: int | None = Field(default=None, ge=1)
    edges: int | None = Field(default=None, ge=0)
    tool_version: str

    @field_validator("family")
    @classmethod
    def validate_family(cls, v: str) -> str:
        """Family names are single tokens."""
        if not v or any(ch.isspace() or ch == "=" for ch in v):
            raise ValueError(f"family must be a single token, got {v!r}")
        return v

    def to_text(self) -> str:
        """Serialize as ``key=value`` lines in a fixed order."""
        lines = [f"family={self.family}"]
        lines.extend(f"{k}={v}" for k, v in self.params.items())
        for key in ("seed", "sigma", "source", "n", "edges"):
            value = getattr(self, key)
            if value is not None:
                lines.append(f"{key}={value!r}" if isinstance(value, float) else f"{key}={value}")
        lines.append(f"tool_version={self.tool_version}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> InstanceMeta:
        """
        Parse ``key=value`` lines; unknown keys become family parameters.

        Raises:
            ValueError: On lines without ``=`` or duplicate keys.
        """
        fields: dict[str, Any] = {}
        params: dict[str, str] = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"line {lineno}: expected key=value, got {raw!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            if key in fields or key in params:
                raise ValueError(f"line {lineno}: duplicate key {key!r}")
            if key in _RESERVED_META_KEYS:
                fields[key] = value
            else:
                params[key] = value
        return cls(params=params, **fields)


class ApproxReportSchema(BaseModel):
    """
    One row of an analysis or reproduction table.

    Ratios are always stored next to the numerator and Max-Cut value they
    were computed from, and must agree with them.
    """

    instance_id: str
    family: str
    params: str = ""
    n: int = Field(ge=1)
    edges: int = Field(ge=0)
    degree: int | None = Field(default=None, ge=0)
    maxcut_value: float | None = None
    maxcut_bound: float | None = None
    maxcut_status: MaxCutStatusLiteral | None = None
    gw_hp: float | None = None
    gw_ratio: float | None = None
    gw_certificate: str | None = None
    qaoa_f1: float | None = None
    qaoa_gamma: float | None = None
    qaoa_beta: float | None = None
    qaoa_ratio: float | None = None
    seconds: float = Field(default=0.0, ge=0.0)
    source: Literal["computed", "paper-sourced"] = "computed"
    warnings: list[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_ratios(self) -> ApproxReportSchema:
        """Every ratio equals its numerator over the reported Max-Cut."""
        for numerator, ratio, name in (
            (self.gw_hp, self.gw_ratio, "gw_ratio"),
            (self.qaoa_f1, self.qaoa_ratio, "qaoa_ratio"),
        ):
            if ratio is None:
                continue
            if self.maxcut_value is None or numerator is None:
                raise ValueError(f"{name} needs both its numerator and maxcut_value")
            expected = numerator / self.maxcut_value
            if not math.isclose(ratio, expected, rel_tol=1e-12, abs_tol=1e-12):
                raise ValueError(f"{name} must equal numerator / maxcut_value, got {ratio}")
            if self.maxcut_status in ("exact", "certified") and not 0 < ratio <= 1 + 1e-12:
                raise ValueError(f"{name} must be in (0, 1] for a proven Max-Cut, got {ratio}")
        return self

    def to_row(self) -> dict[str, Any]:
        """Flat dict for CSV output; warnings joined with ``; ``."""
        row = self.model_dump()
        row["warnings"] = "; ".join(self.warnings)
        return row


class SweepRowSchema(BaseModel):
    """One (m, b) row of the Karloff ratio sweep."""

    m: int = Field(ge=2)
    b: int = Field(ge=1)
    r: float = Field(gt=0.0, lt=0.25)
    alpha_gw: float = Field(gt=0.0, le=1.0)
    alpha_qaoa: float = Field(gt=0.0, le=1.0)
    alpha_qaoa_limit: float = Field(gt=0.0, le=1.0)
    triangle_free: bool

    @field_validator("m")
    @classmethod
    def validate_m(cls, v: int) -> int:
        """m must be even."""
        if v % 2:
            raise ValueError(f"m must be even, got {v}")
        return v


class HistogramRowSchema(BaseModel):
    """A histogram bin emitted by ``stats``."""

    kind: Literal["degree", "weight"]
    lower: float
    upper: float
    count: int = Field(ge=0)


class SpectrumRowSchema(BaseModel):
    """A distinct adjacency eigenvalue emitted by ``spectra``."""

    eigenvalue: float
    multiplicity: int = Field(ge=1)

"""
Instance I/O: edge lists, graph6, embeddings and provenance sidecars.

Edge-list format: the first line is ``n m``; each of the next ``m`` lines is
``u v [w]`` with 1-based vertices ``1 <= u < v <= n`` and an optional decimal
weight defaulting to 1. Writers emit 17 significant digits so that parsing
the output reproduces every weight bit for bit.
"""
from __future__ import annotations

import logging
import math
from pathlib import Path

import networkx as nx
from pydantic import ValidationError

from cutbench.core.errors import GraphParseError
from cutbench.core.models import Embedding, Graph
from cutbench.reports.schemas import InstanceMeta

logger = logging.getLogger("cutbench.io")

GRAPH6_HEADER = b">>graph6<<"
META_SUFFIX = ".meta"


def _parse_int(token: str, what: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(f"{what} must be an integer, got {token!r}", line=line) from None


def parse_edge_list(text: str) -> Graph:
    """
    Parse an edge-list document.

    Args:
        text: File contents.

    Returns:
        The parsed Graph with 0-based vertices.

    Raises:
        GraphParseError: On a malformed header, a malformed edge line, a
            self-loop, a duplicate edge, an out-of-range vertex, a
            non-finite weight, or an edge count differing from the header.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise GraphParseError("empty input, expected header 'n m'", line=1)
    header = lines[0].split()
    if len(header) != 2:
        raise GraphParseError(f"header must be 'n m', got {lines[0]!r}", line=1)
    n = _parse_int(header[0], "vertex count", 1)
    m = _parse_int(header[1], "edge count", 1)
    if n < 1 or m < 0:
        raise GraphParseError(f"header needs n >= 1 and m >= 0, got n={n}, m={m}", line=1)
    body = lines[1:]
    if len(body) != m:
        raise GraphParseError(
            f"header declares {m} edges, found {len(body)} edge lines", line=min(len(lines), m + 2)
        )

    edges: list[tuple[int, int, float]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(body, start=2):
        parts = raw.split()
        if len(parts) not in (2, 3):
            raise GraphParseError(f"expected 'u v [w]', got {raw!r}", line=lineno)
        u = _parse_int(parts[0], "vertex", lineno)
        v = _parse_int(parts[1], "vertex", lineno)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", line=lineno)
        for x in (u, v):
            if not 1 <= x <= n:
                raise GraphParseError(f"vertex {x} out of range 1..{n}", line=lineno)
        if len(parts) == 3:
            try:
                w = float(parts[2])
            except ValueError:
                raise GraphParseError(f"weight must be a number, got {parts[2]!r}", line=lineno) from None
            if not math.isfinite(w):
                raise GraphParseError(f"non-finite weight {parts[2]!r}", line=lineno)
        else:
            w = 1.0
        a, b = (u - 1, v - 1) if u < v else (v - 1, u - 1)
        if (a, b) in seen:
            raise GraphParseError(f"duplicate edge {u} {v}", line=lineno)
        seen.add((a, b))
        edges.append((a, b, w))
    return Graph(n=n, edges=tuple(edges))


def _format_weight(w: float) -> str:
    if w == int(w) and abs(w) < 2**53:
        return str(int(w))
    return format(w, ".17g")


def write_edge_list(g: Graph) -> str:
    """Serialize a Graph in edge-list format (1-based, sorted edges)."""
    lines = [f"{g.n} {g.num_edges}"]
    lines.extend(f"{u + 1} {v + 1} {_format_weight(w)}" for u, v, w in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph6(data: bytes | str) -> Graph:
    """
    Decode one graph6 record into a unit-weight Graph.

    Args:
        data: The record, with or without the ``>>graph6<<`` header and a
            trailing newline.

    Raises:
        GraphParseError: On characters outside 63..126, a truncated size
            prefix, a body of the wrong length, or an empty graph.
    """
    raw = data.encode("ascii", errors="replace") if isinstance(data, str) else bytes(data)
    raw = raw.strip()
    if raw.startswith(GRAPH6_HEADER):
        raw = raw[len(GRAPH6_HEADER):]
    if not raw:
        raise GraphParseError("empty graph6 record")
    bad = [c for c in raw if not 63 <= c <= 126]
    if bad:
        raise GraphParseError(f"graph6 character {bad[0]!r} outside range 63..126")
    if raw[0] == 126 and (len(raw) < 4 or (raw[1] == 126 and len(raw) < 8)):
        raise GraphParseError("truncated graph6 size prefix")
    try:
        h = nx.from_graph6_bytes(raw)
    except (nx.NetworkXError, ValueError, IndexError) as exc:
        raise GraphParseError(f"invalid graph6 record: {exc}") from exc
    if h.number_of_nodes() < 1:
        raise GraphParseError("graph6 record encodes a graph with no vertices")
    return Graph.from_edges(h.number_of_nodes(), h.edges())


def read_graph6_file(path: Path) -> list[Graph]:
    """
    Read every graph6 record in a file, one per non-blank line.

    Raises:
        GraphParseError: With the 1-based line number of the bad record.
    """
    graphs: list[Graph] = []
    for lineno, line in enumerate(path.read_bytes().splitlines(), start=1):
        if not line.strip():
            continue
        try:
            graphs.append(parse_graph6(line))
        except GraphParseError as exc:
            raise GraphParseError(str(exc), line=lineno) from exc
    return graphs


def read_graph(path: Path) -> Graph:
    """
    Read a single instance, choosing the format by suffix.

    ``.g6`` files are graph6 and must hold exactly one record; anything
    else is parsed as an edge list.
    """
    if path.suffix == ".g6":
        graphs = read_graph6_file(path)
        if len(graphs) != 1:
            raise GraphParseError(f"{path} holds {len(graphs)} graph6 records, expected 1")
        return graphs[0]
    return parse_edge_list(path.read_text())


def read_graphs(path: Path) -> list[Graph]:
    """Read one or more instances from a file (several only for graph6)."""
    if path.suffix == ".g6":
        return read_graph6_file(path)
    return [parse_edge_list(path.read_text())]


def write_embedding(e: Embedding) -> str:
    """Embedding as text: one row per vertex, 17 significant digits."""
    rows = (" ".join(format(float(x), ".17g") for x in row) for row in e.vectors)
    return "\n".join(rows) + "\n"


def meta_path(path: Path) -> Path:
    """Sidecar path for an instance file."""
    return path.with_suffix(META_SUFFIX)


def write_meta(path: Path, meta: InstanceMeta) -> Path:
    """Write the provenance sidecar next to ``path`` and return its location."""
    target = meta_path(path)
    target.write_text(meta.to_text())
    return target


def read_meta(path: Path) -> InstanceMeta | None:
    """
    Load the sidecar of an instance file, if present.

    An unreadable sidecar is logged and treated as missing.
    """
    target = meta_path(path)
    if not target.exists():
        return None
    try:
        return InstanceMeta.from_text(target.read_text())
    except (ValidationError, ValueError) as exc:
        logger.warning("Ignoring malformed sidecar %s: %s", target, exc)
        return None


def sidecar_warnings(g: Graph, meta: InstanceMeta) -> list[str]:
    """Disagreements between an instance and its recorded provenance."""
    warnings: list[str] = []
    if meta.n is not None and meta.n != g.n:
        warnings.append(f"sidecar records n={meta.n}, instance has n={g.n}")
    if meta.edges is not None and meta.edges != g.num_edges:
        warnings.append(f"sidecar records {meta.edges} edges, instance has {g.num_edges}")
    perturbed = meta.sigma is not None and meta.sigma > 0
    if perturbed and g.is_unit_weight:
        warnings.append(f"sidecar records sigma={meta.sigma} but every weight is 1")
    if not perturbed and not g.is_unit_weight:
        warnings.append("sidecar records unit weights but instance has non-unit weights")
    for w in warnings:
        logger.warning("Sidecar mismatch: %s", w)
    return warnings

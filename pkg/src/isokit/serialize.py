"""Graph serialization: edge-list text, graph6, and JSON payload helpers.

graph6 is implemented bit-exactly per its published definition for n <= 62:
one byte n+63, then the upper triangle of the adjacency matrix read
column-by-column ((0,1), (0,2), (1,2), (0,3), ...), packed big-endian into
6-bit groups, each emitted as its value plus 63.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .graph import Graph, build_graph


class ParseError(ValueError):
    """Malformed graph input; carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def parse_edgelist(text: str) -> tuple[Graph, list[str]]:
    """Parse "n m" followed by m "u v" lines; '#' starts a comment.

    Returns the graph plus a list of diagnostics (currently: duplicate-edge
    warnings). Self-loops, out-of-range labels, and malformed lines raise
    ParseError with the offending line number.
    """
    rows: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            rows.append((lineno, stripped))
    if not rows:
        raise ParseError("empty input: expected a header line 'n m'")

    header_line, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(f"expected header 'n m', got {header!r}", header_line)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"non-integer header {header!r}", header_line) from None
    if n < 0 or m < 0:
        raise ParseError("vertex and edge counts must be non-negative", header_line)
    if len(rows) - 1 != m:
        raise ParseError(
            f"header promises {m} edges but {len(rows) - 1} edge lines follow",
            header_line,
        )

    warnings: list[str] = []
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for lineno, row in rows[1:]:
        parts = row.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {row!r}", lineno)
        try:
            u, w = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer edge {row!r}", lineno) from None
        if u == w:
            raise ParseError(f"self-loop {u} {w}", lineno)
        if not (0 <= u < n and 0 <= w < n):
            raise ParseError(f"label out of range in {row!r} (n={n})", lineno)
        key = (min(u, w), max(u, w))
        if key in seen:
            warnings.append(f"line {lineno}: duplicate edge {u} {w} collapsed")
        else:
            seen.add(key)
            edges.append(key)
    return build_graph(n, edges), warnings


def emit_edgelist(g: Graph) -> str:
    """Edge-list text for a graph labeled 0..n-1 (other labelings are remapped)."""
    index = {v: i for i, v in enumerate(g.labels)}
    lines = [f"{g.n} {g.m}"]
    lines += [f"{index[u]} {index[w]}" for u, w in g.edges()]
    return "\n".join(lines) + "\n"


def emit_graph6(g: Graph) -> str:
    """graph6 encoding of the graph's structure.

    Vertices are taken in ascending label order; for graphs labeled 0..n-1
    the encoding is position-faithful and parse(emit(g)) == g. Only the
    one-byte size header is supported (n <= 62).
    """
    n = g.n
    if n > 62:
        raise ValueError(f"graph6 one-byte header supports n <= 62, got {n}")
    index = {v: i for i, v in enumerate(g.labels)}
    bits = bytearray(n * (n - 1) // 2)
    for u, w in g.edges():
        i, j = index[u], index[w]
        if i > j:
            i, j = j, i
        bits[j * (j - 1) // 2 + i] = 1
    out = [chr(n + 63)]
    for start in range(0, len(bits), 6):
        group = 0
        chunk = bits[start : start + 6]
        for b in chunk:
            group = (group << 1) | b
        group <<= 6 - len(chunk)
        out.append(chr(group + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string into a graph on labels 0..n-1."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise ParseError("empty graph6 string")
    first = ord(s[0])
    if not 63 <= first <= 126:
        raise ParseError(f"invalid graph6 byte {first}")
    if first == 126:
        raise ParseError("multi-byte graph6 size headers are not supported (n > 62)")
    n = first - 63
    need_bits = n * (n - 1) // 2
    need_bytes = (need_bits + 5) // 6
    body = s[1:]
    if len(body) != need_bytes:
        raise ParseError(
            f"graph6 body for n={n} needs {need_bytes} bytes, got {len(body)}"
        )
    bits: list[int] = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise ParseError(f"invalid graph6 byte {ord(ch)}")
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return build_graph(n, edges)


# -- JSON run records ---------------------------------------------------

RUN_RECORD_SCHEMA_ID = "isokit/run-record/v1"

RUN_RECORD_SCHEMA: dict[str, Any] = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["schema", "input", "operation", "result", "wall_time_s"],
    "properties": {
        "schema": {"const": RUN_RECORD_SCHEMA_ID},
        "input": {"type": "string"},
        "operation": {"type": "string"},
        "result": {"type": "object"},
        "wall_time_s": {"type": "number", "minimum": 0},
    },
}


@dataclass
class RunRecord:
    """One CLI invocation's machine-readable result."""

    input: str
    operation: str
    result: dict[str, Any] = field(default_factory=dict)
    wall_time_s: float = 0.0

    def to_json(self) -> str:
        payload = {
            "schema": RUN_RECORD_SCHEMA_ID,
            "input": self.input,
            "operation": self.operation,
            "result": self.result,
            "wall_time_s": self.wall_time_s,
        }
        return json.dumps(payload, sort_keys=True)


def trace_payload(trace) -> list[dict[str, Any]]:
    """Serialize solver trace steps as {case_label, added, removed} rows."""
    return [
        {
            "case_label": step.case_label,
            "added": sorted(step.added),
            "removed": sorted(step.removed),
        }
        for step in trace
    ]

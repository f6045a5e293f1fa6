"""Graph serialization: graph6 and edge lists in both directions, DOT and JSON out."""

from __future__ import annotations

import json
from typing import Iterable

from quasiline.errors import EdgeListError, GraphFormatError, GraphLengthError, VertexRangeError
from quasiline.graph import Graph

_HEADER = b">>graph6<<"
_MAX_G6_N = (1 << 36) - 1


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= _MAX_G6_N:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"graph6 cannot encode n={n}")


def encode_graph6(g: Graph) -> bytes:
    """graph6 bytes for ``g``, without header or trailing newline."""
    out = bytearray(_encode_n(g.n))
    rows = g.rows
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = rows[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    data = text.encode("ascii", errors="replace") if isinstance(text, str) else bytes(text)
    data = data.strip()
    base = 0
    if data.startswith(_HEADER):
        base = len(_HEADER)
        data = data[base:]
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphFormatError(f"byte {b!r} outside graph6 range 63..126", offset=base + i)
    if not data:
        raise GraphLengthError("empty graph6 string", offset=base)

    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphLengthError("truncated 36-bit vertex count", offset=base + len(data))
        n, pos = _decode_bigendian(data[2:8]), 8
    else:
        if len(data) < 4:
            raise GraphLengthError("truncated 18-bit vertex count", offset=base + len(data))
        n, pos = _decode_bigendian(data[1:4]), 4

    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise GraphLengthError(
            f"graph6 body has {len(body)} bytes, {need} needed for n={n}", offset=base + len(data)
        )
    if len(body) > need:
        raise GraphFormatError("trailing bytes after graph6 body", offset=base + pos + need)

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph._trusted(n, tuple(rows))


def _decode_bigendian(chunk: bytes) -> int:
    value = 0
    for b in chunk:
        value = value << 6 | (b - 63)
    return value


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Parse ``u v`` lines; ``#`` comments and blank lines are skipped."""
    edges: set[tuple[int, int]] = set()
    top = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: non-integer label in {line!r}") from None
        if u < 0 or v < 0:
            raise EdgeListError(f"line {lineno}: negative label in {line!r}")
        if u == v:
            raise EdgeListError(f"line {lineno}: self-loop {u} {v}")
        if n is not None and max(u, v) >= n:
            raise VertexRangeError(f"line {lineno}: label {max(u, v)} >= n={n}")
        edges.add((min(u, v), max(u, v)))
        top = max(top, u, v)
    if n is None:
        n = top + 1
    return Graph.from_edges(n, edges)


def encode_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def to_dot(g: Graph, highlight: Iterable[int] = (), name: str = "G") -> str:
    marked = set(highlight)
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        style = ' [color=red, style=filled, fillcolor="#ffdddd"]' if v in marked else ""
        lines.append(f"  {v}{style};")
    for u, v in g.edges():
        style = " [color=red]" if u in marked and v in marked else ""
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]})

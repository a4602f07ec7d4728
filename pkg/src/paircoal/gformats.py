"""Text formats: graph6, edge lists, partition JSON, and survey CSV rows.

graph6 follows the de-facto standard byte encoding: the order in one byte
(value + 63) or, from 63 up, a ``~`` marker followed by three 6-bit chunks;
then the upper triangle of the adjacency matrix in column order packed into
6-bit chunks, each + 63.
"""

from __future__ import annotations

import json

from .coalition import Partition
from .graphs import Graph, canonical_form

GRAPH6_SMALL_MAX = 62


class FormatError(ValueError):
    """Malformed textual input; carries the offending position."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


def graph6_encode(g: Graph) -> str:
    n = g.n
    if n <= GRAPH6_SMALL_MAX:
        head = [n + 63]
    else:
        head = [126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)]
    bits = []
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            bits.append((col >> i) & 1)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        body.append(val + 63)
    return bytes(head + body).decode("ascii")


def graph6_decode(text: str) -> Graph:
    data = text.strip().encode("ascii", errors="replace")
    if not data:
        raise FormatError("empty graph6 string")
    pos = 0
    if data[0] == 126:
        if len(data) < 4:
            raise FormatError("truncated graph6 order header", 0)
        if data[1] == 126:
            raise FormatError("graph6 orders above 258047 not supported", 1)
        vals = []
        for i in range(1, 4):
            if not 63 <= data[i] <= 126:
                raise FormatError("byte out of graph6 range", i)
            vals.append(data[i] - 63)
        n = (vals[0] << 12) | (vals[1] << 6) | vals[2]
        pos = 4
    else:
        if not 63 <= data[0] <= 126:
            raise FormatError("byte out of graph6 range", 0)
        n = data[0] - 63
        pos = 1
    if n < 1:
        raise FormatError("graph6 order must be at least 1", 0)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) - pos != need:
        raise FormatError(
            f"expected {need} body bytes for order {n}, got {len(data) - pos}", pos
        )
    bits = []
    for i in range(pos, len(data)):
        byte = data[i]
        if not 63 <= byte <= 126:
            raise FormatError("byte out of graph6 range", i)
        val = byte - 63
        for shift in range(5, -1, -1):
            bits.append((val >> shift) & 1)
    adj = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    for i in range(idx, len(bits)):
        if bits[i]:
            raise FormatError("nonzero padding bits", pos + i // 6)
    return Graph(n, tuple(adj))


def canonical_graph6(g: Graph) -> str:
    """graph6 of the canonically labeled copy (reports use this form)."""
    return graph6_encode(canonical_form(g))


def edge_list_encode(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines)


def edge_list_decode(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise FormatError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError("first line must be 'n m'", 1)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError("first line must be 'n m'", 1) from None
    if len(lines) - 1 != m:
        raise FormatError(f"expected {m} edge lines, got {len(lines) - 1}", 1)
    edges = []
    for ln_no, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2:
            raise FormatError("edge line must be 'u v'", ln_no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError("edge line must be 'u v'", ln_no) from None
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "graph6":
        return graph6_decode(text)
    if fmt == "edge-list":
        return edge_list_decode(text)
    raise FormatError(f"unknown graph format {fmt!r}")


def emit_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return graph6_encode(g)
    if fmt == "edge-list":
        return edge_list_encode(g)
    raise FormatError(f"unknown graph format {fmt!r}")


def partition_to_json(p: Partition) -> str:
    """JSON form ``{"blocks": [[...]]}`` with blocks sorted by least element."""
    return json.dumps({"blocks": p.vertex_lists()})


def partition_from_json(text: str, n: int) -> Partition:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"bad partition JSON: {exc.msg}", exc.pos) from exc
    if not isinstance(data, dict) or "blocks" not in data:
        raise FormatError("partition JSON must be an object with a 'blocks' key")
    blocks = data["blocks"]
    if not isinstance(blocks, list) or not all(isinstance(b, list) for b in blocks):
        raise FormatError("'blocks' must be a list of vertex lists")
    return Partition.from_vertex_lists(n, blocks)


def write_graph6_file(graphs, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(graph6_encode(g) + "\n")


def read_graph6_file(path) -> list[Graph]:
    out = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(graph6_decode(line))
    return out

"""graph6 and plain edge-list serialization.

graph6 follows the published interchange format bit-for-bit: a size prefix
(single byte for n <= 62, 126 + three bytes for n <= 258047), then the
upper triangle of the adjacency matrix in column order, packed into 6-bit
groups offset by 63. Padding bits must be zero.
"""

from __future__ import annotations

from .core import Graph, build_graph

GRAPH6_HEADER = b">>graph6<<"
_MAX_LONG_N = 258047


def parse_graph6(line: bytes | str) -> Graph:
    if isinstance(line, str):
        data = line.strip().encode("ascii")
    else:
        data = bytes(line).strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise ValueError("empty graph6 input")
    for byte in data:
        if not 63 <= byte <= 126:
            raise ValueError(f"graph6 byte {byte} outside 63..126")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise ValueError("graph6 sizes above 258047 are not supported")
        if len(data) < 4:
            raise ValueError("truncated graph6 size prefix")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 payload has {len(body)} bytes, expected {need}")
    acc = 0
    for byte in body:
        acc = (acc << 6) | (byte - 63)
    total = need * 6
    pad = total - nbits
    if pad and acc & ((1 << pad) - 1):
        raise ValueError("graph6 padding bits are nonzero")
    masks = [0] * n
    i = 0
    for col in range(1, n):
        for row in range(col):
            if (acc >> (total - 1 - i)) & 1:
                masks[row] |= 1 << col
                masks[col] |= 1 << row
            i += 1
    return Graph(n, tuple(masks))


def emit_graph6(g: Graph) -> bytes:
    n = g.n
    if n <= 62:
        head = bytes([n + 63])
    elif n <= _MAX_LONG_N:
        head = bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    else:
        raise ValueError(f"graph6 size overflow: {n} > {_MAX_LONG_N}")
    nbits = n * (n - 1) // 2
    acc = 0
    for col in range(1, n):
        for row in range(col):
            acc = (acc << 1) | ((g.adj[row] >> col) & 1)
    pad = (-nbits) % 6
    acc <<= pad
    total = nbits + pad
    body = bytearray()
    for shift in range(total - 6, -6, -6):
        body.append(((acc >> shift) & 63) + 63)
    return head + bytes(body)


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Parse "u v" lines (0-based); '#' starts a comment.

    The magic comment "# n <count>" declares the vertex count, which keeps
    trailing isolated vertices across a round trip; otherwise the count is
    the largest endpoint + 1 (or the explicit ``n`` argument).
    """
    declared = n
    edges = []
    top = -1
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] == "n" and parts[1].isdigit() and n is None:
                declared = int(parts[1])
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {raw!r}")
        u, v = int(parts[0]), int(parts[1])
        edges.append((u, v))
        top = max(top, u, v)
    count = declared if declared is not None else top + 1
    return build_graph(count, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"# n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def iter_graph6_file(path: str):
    """Yield graphs from a file with one graph6 line per graph."""
    with open(path, "rb") as handle:
        for raw in handle:
            line = raw.strip()
            if line:
                yield parse_graph6(line)

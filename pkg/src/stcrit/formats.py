"""graph6, edge-list and DOT serialization."""

from __future__ import annotations

from .graph import MAX_VERTICES, Graph, GraphError, members

HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    pass


def _size_prefix(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def write_graph6(G: Graph) -> str:
    """graph6 encoding: upper triangle in column order, 6-bit chunks offset by 63."""
    n = G.n
    bits = []
    for j in range(1, n):
        col = G.adj[j]
        for i in range(j):
            bits.append(col >> i & 1)
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _size_prefix(n) + body


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 record")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} out of graph6 range [63, 126]")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    else:
        if len(vals) >= 2 and vals[1] == 63:
            raise Graph6Error("graph6 sizes above 258047 are not supported")
        if len(vals) < 4:
            raise Graph6Error("truncated graph6 size field")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    if n == 0:
        raise Graph6Error("graph6 record has zero vertices; the empty graph is unsupported")
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph6 record has {n} vertices, capacity is {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    body = vals[pos:]
    if len(body) != nbytes:
        raise Graph6Error(f"graph6 body has {len(body)} bytes, expected {nbytes} for n={n}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbytes and body[-1] & ((1 << (nbytes * 6 - nbits)) - 1):
        raise Graph6Error("graph6 padding bits are not zero")
    return Graph(n, tuple(adj))


def write_edge_list(G: Graph) -> str:
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise GraphError("empty edge list")
    try:
        n, m = map(int, lines[0])
        edges = [(int(u), int(v)) for u, v in lines[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise GraphError(f"edge list declares {m} edges but has {len(edges)}")
    return Graph.from_edges(n, edges)


PALETTE = (
    "red", "blue", "green", "orange", "purple", "cyan", "magenta", "gold",
    "brown", "gray", "pink", "olive",
)


def write_dot(G: Graph, parts: list[int] | None = None, name: str = "G") -> str:
    """Undirected DOT; ``parts`` (vertex masks) colour the vertices."""
    out = [f"graph {name} {{"]
    if parts:
        for i, part in enumerate(parts):
            color = PALETTE[i % len(PALETTE)]
            for v in members(part):
                out.append(f'  {v} [style=filled, fillcolor={color}, label="{v}/{i}"];')
    else:
        for v in range(G.n):
            out.append(f"  {v};")
    for u, v in G.edges():
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"

"""Bitmask graphs, named families, and the small amount of structure the rest
of the package needs (neighbourhoods, deletion, distances, products).

Vertex sets are plain ``int`` bitmasks throughout: bit ``v`` set means vertex
``v`` is in the set.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

MAX_VERTICES = 64
INF = float("inf")


class GraphError(ValueError):
    """Invalid graph, graph parameters, or vertex set."""


def bit(v: int) -> int:
    return 1 << v


def members(mask: int) -> list[int]:
    """Vertices of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count must be in [1, {MAX_VERTICES}], got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside [0, {self.n})")
            if nb >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 1 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count must be in [1, {MAX_VERTICES}], got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def closed(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    @property
    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def check_set(self, mask: int) -> None:
        if mask < 0 or mask & ~self.full:
            raise GraphError(f"vertex set {mask:#x} not contained in [0, {self.n})")

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- neighbourhoods and subgraphs -------------------------------------------


def open_neighborhood(G: Graph, S: int) -> int:
    out = 0
    for v in iter_bits(S):
        out |= G.adj[v]
    return out


def closed_neighborhood(G: Graph, S: int) -> int:
    G.check_set(S)
    return open_neighborhood(G, S) | S


def induced_subgraph(G: Graph, keep: int) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``keep``, relabelled to ``0..k-1`` in id order.

    Returns the graph and the old-to-new id map.
    """
    G.check_set(keep)
    if keep == 0:
        raise GraphError("induced subgraph on the empty set")
    old = members(keep)
    new_id = {v: i for i, v in enumerate(old)}
    adj = []
    for v in old:
        adj.append(mask_of(new_id[u] for u in iter_bits(G.adj[v] & keep)))
    return Graph(len(old), tuple(adj)), new_id


def delete_vertices(G: Graph, S: int) -> tuple[Graph, dict[int, int]]:
    """``G - S`` with its old-to-new id map. Deleting every vertex is an error."""
    G.check_set(S)
    if S == G.full:
        raise GraphError("cannot delete every vertex: the empty graph is unsupported")
    return induced_subgraph(G, G.full & ~S)


def relabel(G: Graph, order: list[int]) -> Graph:
    """Graph whose vertex ``i`` is ``order[i]`` of ``G``."""
    pos = {v: i for i, v in enumerate(order)}
    return Graph(G.n, tuple(mask_of(pos[u] for u in iter_bits(G.adj[v])) for v in order))


def disjoint_union(G: Graph, H: Graph) -> Graph:
    if G.n + H.n > MAX_VERTICES:
        raise GraphError("disjoint union exceeds vertex capacity")
    return Graph(G.n + H.n, G.adj + tuple(nb << G.n for nb in H.adj))


# -- distances and connectivity ----------------------------------------------


def reach(G: Graph, start: int, within: int | None = None) -> int:
    """Vertices reachable from ``start`` inside ``within`` (default: all)."""
    if within is None:
        within = G.full
    seen = frontier = bit(start) & within
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= G.adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def components(G: Graph, within: int | None = None) -> list[int]:
    if within is None:
        within = G.full
    out = []
    rest = within
    while rest:
        comp = reach(G, lowest(rest), within)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(G: Graph) -> bool:
    return reach(G, 0) == G.full


def distance(G: Graph, u: int, v: int) -> int | float:
    """Shortest-path length, or ``INF`` across components."""
    if not (0 <= u < G.n and 0 <= v < G.n):
        raise GraphError(f"vertex out of range: {u}, {v}")
    seen = frontier = bit(u)
    d = 0
    while frontier:
        if frontier >> v & 1:
            return d
        nxt = 0
        for w in iter_bits(frontier):
            nxt |= G.adj[w]
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
    return INF


# -- families ----------------------------------------------------------------


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("complete bipartite sides must be non-empty")
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def circulant(n: int, offsets: Iterable[int]) -> Graph:
    offs = sorted(set(offsets))
    if n < 2:
        raise GraphError("circulant needs n >= 2")
    if not offs or any(not 1 <= o <= n // 2 for o in offs):
        raise GraphError(f"circulant offsets must lie in [1, {n // 2}], got {offs}")
    return Graph.from_edges(n, [(i, (i + o) % n) for i in range(n) for o in offs])


def harary(k: int, n: int) -> Graph:
    """Harary graph H_{k,n}: k-connected on n vertices with the fewest edges."""
    if not 2 <= k < n:
        raise GraphError(f"harary needs 2 <= k < n, got k={k}, n={n}")
    half = k // 2
    edges = [(i, (i + o) % n) for i in range(n) for o in range(1, half + 1)]
    if k % 2:
        if n % 2 == 0:
            edges += [(i, i + n // 2) for i in range(n // 2)]
        else:
            edges += [(i, (i + (n + 1) // 2) % n) for i in range((n + 1) // 2)]
    return Graph.from_edges(n, edges)


def corona(base: Graph) -> Graph:
    """Attach one pendant vertex to every vertex of ``base`` (a generalized comb)."""
    if not is_connected(base):
        raise GraphError("comb base must be connected")
    n = base.n
    if 2 * n > MAX_VERTICES:
        raise GraphError("comb exceeds vertex capacity")
    return Graph.from_edges(2 * n, base.edges() + [(v, n + v) for v in range(n)])


def k2t2t_minus_4cycles(t: int) -> Graph:
    """K_{2t,2t} with the edges of t vertex-disjoint 4-cycles removed.

    Side A is ``0..2t-1`` and side B is ``2t..4t-1``; group ``i`` pairs
    ``{a_2i, a_2i+1}`` with ``{b_2i, b_2i+1}``. Disconnected results (t <= 2)
    are rejected.
    """
    if t < 1 or 4 * t > MAX_VERTICES:
        raise GraphError(f"t out of range: {t}")
    s = 2 * t
    edges = [(a, s + b) for a in range(s) for b in range(s) if a // 2 != b // 2]
    G = Graph.from_edges(2 * s, edges)
    if not is_connected(G):
        raise GraphError(f"K_{{2t,2t}} minus {t} disjoint 4-cycles is disconnected for t={t}")
    return G


def cartesian_product(G: Graph, H: Graph) -> Graph:
    """G □ H with vertex ``(g, h)`` numbered ``g * H.n + h``."""
    if G.n * H.n > MAX_VERTICES:
        raise GraphError("cartesian product exceeds vertex capacity")
    m = H.n
    edges = []
    for g in range(G.n):
        for h, h2 in H.edges():
            edges.append((g * m + h, g * m + h2))
    for g, g2 in G.edges():
        for h in range(m):
            edges.append((g * m + h, g2 * m + h))
    return Graph.from_edges(G.n * m, edges)


# -- family descriptors ------------------------------------------------------


@dataclass(frozen=True)
class GraphSpec:
    """A named family member, e.g. ``GraphSpec("circulant", (12, (1, 5)))``.

    The textual form used by the CLI is ``family:arg:arg``; see ``parse_spec``.
    """

    family: str
    params: tuple

    def __str__(self):
        def fmt(p):
            if isinstance(p, tuple):
                return ",".join(map(str, p))
            return str(p)

        return ":".join([self.family, *map(fmt, self.params)])


FAMILIES = (
    "cycle", "path", "complete", "complete-bipartite", "circulant", "harary",
    "comb", "k2t2t-minus-4cycles", "c4-power", "g6", "edges",
)


def parse_spec(text: str) -> GraphSpec:
    """Parse ``cycle:9``, ``circulant:12:1,5``, ``harary:4:6``, ``comb:path:3``,
    ``complete-bipartite:3:3``, ``k2t2t-minus-4cycles:3``, ``c4-power:2``, ``g6:C~`` or
    ``edges:4:0-1,1-2,2-3``."""
    family, _, rest = text.strip().partition(":")
    try:
        if family in ("cycle", "path", "complete", "k2t2t-minus-4cycles", "c4-power"):
            return GraphSpec(family, (int(rest),))
        if family in ("complete-bipartite", "harary"):
            a, b = rest.split(":")
            return GraphSpec(family, (int(a), int(b)))
        if family == "circulant":
            n, offs = rest.split(":")
            return GraphSpec(family, (int(n), tuple(int(o) for o in offs.split(","))))
        if family == "comb":
            return GraphSpec(family, (parse_spec(rest),))
        if family == "g6":
            if not rest:
                raise GraphError("empty graph6 string")
            return GraphSpec(family, (rest,))
        if family == "edges":
            n, _, body = rest.partition(":")
            pairs = []
            for tok in filter(None, body.split(",")):
                u, v = tok.split("-")
                pairs.append((int(u), int(v)))
            return GraphSpec(family, (int(n), tuple(pairs)))
    except ValueError as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"cannot parse graph spec {text!r}: {exc}") from None
    raise GraphError(f"unknown graph family {family!r} in {text!r}")


def generate(spec: GraphSpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    fam, p = spec.family, spec.params
    if fam == "cycle":
        return cycle(*p)
    if fam == "path":
        return path(*p)
    if fam == "complete":
        return complete(*p)
    if fam == "complete-bipartite":
        return complete_bipartite(*p)
    if fam == "circulant":
        return circulant(*p)
    if fam == "harary":
        return harary(*p)
    if fam == "comb":
        base = p[0]
        return corona(base if isinstance(base, Graph) else generate(base))
    if fam == "k2t2t-minus-4cycles":
        return k2t2t_minus_4cycles(*p)
    if fam == "c4-power":
        from .coalescence import build_c4_power

        return build_c4_power(*p).graph
    if fam == "g6":
        from .formats import parse_graph6

        return parse_graph6(p[0])
    if fam == "edges":
        return Graph.from_edges(p[0], p[1])
    raise GraphError(f"unknown graph family {fam!r}")


def bipartition(G: Graph) -> tuple[int, int] | None:
    """Colour classes of a proper 2-colouring, or None if ``G`` has an odd cycle."""
    side = [-1] * G.n
    for root in range(G.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in iter_bits(G.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return None
    a = mask_of(v for v in range(G.n) if side[v] == 0)
    return a, G.full & ~a


def is_bipartite(G: Graph) -> bool:
    return bipartition(G) is not None

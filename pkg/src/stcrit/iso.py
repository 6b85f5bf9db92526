"""Canonical codes and isomorphism testing for small graphs.

``canonical_code`` uses individualization-refinement: colour refinement
splits the vertices, the search individualizes one vertex of the smallest
non-trivial cell at a time, and the code is the least graph6 string over all
leaves. Twin vertices in a target cell are interchangeable by an automorphism,
so only one per twin class is expanded.

``is_isomorphic`` is a separate degree-guided backtracking matcher, so the two
can be checked against each other.
"""

from __future__ import annotations

from .formats import write_graph6
from .graph import Graph, iter_bits, relabel


def _refine(nbrs: list[list[int]], colors: list[int]) -> list[int]:
    k = len(set(colors))
    while True:
        sig = [(colors[v], tuple(sorted(colors[w] for w in nb))) for v, nb in enumerate(nbrs)]
        rank = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [rank[s] for s in sig]
        if len(rank) == k:
            return new
        colors, k = new, len(rank)


def _code(G: Graph, order: list[int]) -> str:
    return write_graph6(relabel(G, order))


def canonical_order(G: Graph) -> list[int]:
    """Vertex order whose relabelling gives the canonical form."""
    n = G.n
    nbrs = [list(iter_bits(nb)) for nb in G.adj]
    adj = G.adj
    best: list = [None, None]

    def twins(u: int, v: int) -> bool:
        return adj[u] & ~(1 << v) == adj[v] & ~(1 << u)

    def search(colors: list[int]) -> None:
        colors = _refine(nbrs, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        if len(cells) == n:
            order = sorted(range(n), key=colors.__getitem__)
            code = _code(G, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        target = min((len(cell), c) for c, cell in cells.items() if len(cell) > 1)[1]
        reps: list[int] = []
        for v in cells[target]:
            if not any(twins(v, r) for r in reps):
                reps.append(v)
        for v in reps:
            search([2 * c + (0 if u == v else 1) for u, c in enumerate(colors)])

    search([0] * n)
    return best[1]


def canonical_form(G: Graph) -> Graph:
    return relabel(G, canonical_order(G))


def canonical_code(G: Graph) -> bytes:
    """Complete isomorphism invariant: equal codes iff isomorphic graphs."""
    return _code(G, canonical_order(G)).encode("ascii")


def _vertex_invariant(G: Graph, v: int) -> tuple:
    return (G.degree(v), tuple(sorted(G.degree(u) for u in iter_bits(G.adj[v]))))


def find_isomorphism(G: Graph, H: Graph) -> dict[int, int] | None:
    """An adjacency-preserving bijection ``V(G) -> V(H)``, or ``None``."""
    if G.n != H.n or G.num_edges != H.num_edges:
        return None
    inv_g = [_vertex_invariant(G, v) for v in range(G.n)]
    inv_h = [_vertex_invariant(H, v) for v in range(H.n)]
    if sorted(inv_g) != sorted(inv_h):
        return None

    # match G's vertices in BFS-like order so each new vertex touches mapped ones
    order: list[int] = []
    placed = 0
    while len(order) < G.n:
        frontier = [v for v in range(G.n) if not placed >> v & 1]
        v = max(frontier, key=lambda u: ((G.adj[u] & placed).bit_count(), inv_g[u]))
        order.append(v)
        placed |= 1 << v

    mapping: dict[int, int] = {}
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == len(order):
            return True
        v = order[i]
        for w in range(H.n):
            if used >> w & 1 or inv_h[w] != inv_g[v]:
                continue
            if any(G.has_edge(v, u) != H.has_edge(w, mu) for u, mu in mapping.items()):
                continue
            mapping[v] = w
            used |= 1 << w
            if extend(i + 1):
                return True
            del mapping[v]
            used &= ~(1 << w)
        return False

    return dict(mapping) if extend(0) else None


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return find_isomorphism(G, H) is not None

"""Vertex and vertex-set coalescence, vertex identification, and the
constructions and checks built on them.

Coalescence numbering: ``G`` keeps its ids; the unmerged vertices of ``H``
follow in id order; each merged ``H`` vertex takes its partner's id.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .criticality import StCriticalChecker, is_vertex_critical
from .domination import gamma
from .graph import MAX_VERTICES, Graph, GraphError, bit, cycle, iter_bits, mask_of, members


@dataclass(frozen=True)
class CoalescenceSpec:
    g: Graph
    h: Graph
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.pairs:
            raise GraphError("coalescence needs at least one identified pair")
        xs = [x for x, _ in self.pairs]
        ys = [y for _, y in self.pairs]
        if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
            raise GraphError("identified vertices must be distinct on each side")
        if any(not 0 <= x < self.g.n for x in xs) or any(not 0 <= y < self.h.n for y in ys):
            raise GraphError("identified vertex out of range")


@dataclass(frozen=True)
class Coalesced:
    """Result graph plus the maps from each input's ids into it."""

    graph: Graph
    map_g: tuple[int, ...]
    map_h: tuple[int, ...]

    def image_g(self, S: int) -> int:
        return mask_of(self.map_g[v] for v in iter_bits(S))

    def image_h(self, S: int) -> int:
        return mask_of(self.map_h[v] for v in iter_bits(S))


def vertex_set_coalescence(spec: CoalescenceSpec) -> Coalesced:
    G, H = spec.g, spec.h
    n = G.n + H.n - len(spec.pairs)
    if n > MAX_VERTICES:
        raise GraphError("coalescence exceeds vertex capacity")
    partner = dict((y, x) for x, y in spec.pairs)
    map_h = []
    nxt = G.n
    for y in range(H.n):
        if y in partner:
            map_h.append(partner[y])
        else:
            map_h.append(nxt)
            nxt += 1
    edges = set(G.edges())
    for a, b in H.edges():
        u, v = map_h[a], map_h[b]
        edges.add((min(u, v), max(u, v)))
    return Coalesced(Graph.from_edges(n, sorted(edges)), tuple(range(G.n)), tuple(map_h))


def vertex_coalescence(G: Graph, g: int, H: Graph, h: int) -> Coalesced:
    return vertex_set_coalescence(CoalescenceSpec(G, H, ((g, h),)))


def identify_vertices(J: Graph, x: int, y: int) -> tuple[Graph, dict[int, int]]:
    """Merge ``y`` into ``x``; a loop from an edge ``xy`` is dropped.

    Returns the graph and the old-to-new id map (``y`` maps to ``x``'s new id).
    """
    if x == y:
        raise GraphError("identify_vertices needs two distinct vertices")
    if J.n < 2:
        raise GraphError("identify_vertices needs n >= 2")
    keep = [v for v in range(J.n) if v != y]
    new_id = {v: i for i, v in enumerate(keep)}
    new_id[y] = new_id[x]
    edges = set()
    for a, b in J.edges():
        u, v = new_id[a], new_id[b]
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(J.n - 1, sorted(edges)), new_id


def merge_partitions(co: Coalesced, parts_g, parts_h) -> tuple[int, ...]:
    """Family ``{X1..Xk, Y2..Yl}`` mapped into the coalescence via ``X1 ~ Y1``."""
    return tuple(co.image_g(p) for p in parts_g) + tuple(co.image_h(p) for p in parts_h[1:])


def _pairs_between(X: int, Y: int) -> tuple[tuple[int, int], ...]:
    xs, ys = members(X), members(Y)
    if len(xs) != len(ys):
        raise GraphError("X and Y must have equal size")
    return tuple(zip(xs, ys))


# -- families ------------------------------------------------------------------


@dataclass
class Construction:
    """A graph built by repeated coalescence with its tracked partition."""

    graph: Graph
    parts: tuple[int, ...]
    history: list[tuple[int, int]] = field(default_factory=list)


def attach_c4s(start: Graph, start_parts: tuple[int, ...], at: int, copies: int) -> Construction:
    """Coalesce ``copies`` fresh C4s onto vertex ``at`` one after another.

    ``{at}`` must be a part of ``start_parts``; each step merges that singleton
    with C4's vertex 0 and keeps C4's other three singletons as new parts.
    """
    if bit(at) not in start_parts:
        raise GraphError(f"attachment vertex {at} is not a singleton part")
    c4 = cycle(4)
    c4_parts = (1, 2, 4, 8)
    graph, parts = start, tuple(start_parts)
    history = []
    for _ in range(copies):
        co = vertex_coalescence(graph, at, c4, 0)
        parts = merge_partitions(co, parts, c4_parts)
        history.append((at, co.map_h[0]))
        graph = co.graph
    return Construction(graph, parts, history)


def build_c4_power(k: int) -> Construction:
    """(C4)^k: k copies of C4 glued at one shared vertex (vertex 0).

    Every step attaches at the vertex merged most recently, which is always
    vertex 0; the tracked partition is the 3k+1 singletons.
    """
    if not 1 <= k <= 21:
        raise GraphError(f"k must be in [1, 21], got {k}")
    c4 = cycle(4)
    return attach_c4s(c4, (1, 2, 4, 8), 0, k - 1)


# -- bound checks ----------------------------------------------------------------


def _st(G: Graph, S: int, chk: StCriticalChecker | None = None) -> bool:
    return (chk or StCriticalChecker(G)).check(S) is not None


@dataclass
class SetCoalescenceReport:
    """Bounds, the st-criticality biconditional, and the γ equality for
    ``G ._{XY} H``."""

    gamma_g: int
    gamma_h: int
    gamma_co: int
    size: int
    x_in_g: bool
    y_in_h: bool
    x_in_co: bool

    @property
    def bounds_ok(self) -> bool:
        return self.gamma_g + self.gamma_h - self.size <= self.gamma_co <= self.gamma_g + self.gamma_h

    @property
    def iff_ok(self) -> bool:
        return (self.x_in_g and self.y_in_h) == self.x_in_co

    @property
    def equality_ok(self) -> bool:
        return not self.x_in_co or self.gamma_co == self.gamma_g + self.gamma_h - self.size

    @property
    def ok(self) -> bool:
        return self.bounds_ok and self.iff_ok and self.equality_ok

    def as_dict(self) -> dict:
        return {
            "gamma_g": self.gamma_g, "gamma_h": self.gamma_h, "gamma_coalescence": self.gamma_co,
            "size": self.size, "x_st_critical_in_g": self.x_in_g, "y_st_critical_in_h": self.y_in_h,
            "x_st_critical_in_coalescence": self.x_in_co, "bounds_ok": self.bounds_ok,
            "iff_ok": self.iff_ok, "equality_ok": self.equality_ok,
        }


def verify_set_coalescence(G: Graph, X: int, H: Graph, Y: int) -> SetCoalescenceReport:
    """Check the vertex-set coalescence bounds, biconditional and equality.

    ``X`` and ``Y`` are paired in increasing id order.
    """
    co = vertex_set_coalescence(CoalescenceSpec(G, H, _pairs_between(X, Y)))
    J = co.graph
    return SetCoalescenceReport(
        gamma_g=gamma(G).gamma,
        gamma_h=gamma(H).gamma,
        gamma_co=gamma(J).gamma,
        size=X.bit_count(),
        x_in_g=_st(G, X),
        y_in_h=_st(H, Y),
        x_in_co=_st(J, co.image_g(X)),
    )


@dataclass
class VertexCoalescenceReport:
    gamma_g: int
    gamma_h: int
    gamma_co: int
    g_critical: bool
    h_critical: bool
    co_critical: bool

    @property
    def bounds_ok(self) -> bool:
        return self.gamma_g + self.gamma_h - 1 <= self.gamma_co <= self.gamma_g + self.gamma_h

    @property
    def equality_ok(self) -> bool:
        premise = (self.g_critical and self.h_critical) or self.co_critical
        return not premise or self.gamma_co == self.gamma_g + self.gamma_h - 1

    @property
    def iff_ok(self) -> bool:
        return self.co_critical == (self.g_critical and self.h_critical)

    @property
    def ok(self) -> bool:
        return self.bounds_ok and self.equality_ok and self.iff_ok


def verify_vertex_coalescence(G: Graph, g: int, H: Graph, h: int) -> VertexCoalescenceReport:
    """Bounds, equality and vertex-criticality biconditional for ``G ._{gh} H``."""
    J = vertex_coalescence(G, g, H, h).graph
    return VertexCoalescenceReport(
        gamma(G).gamma, gamma(H).gamma, gamma(J).gamma,
        is_vertex_critical(G), is_vertex_critical(H), is_vertex_critical(J),
    )


def _is_st_partition(G: Graph, parts) -> bool:
    seen = 0
    for p in parts:
        if p == 0 or p & seen or p & ~G.full:
            return False
        seen |= p
    if seen != G.full:
        return False
    chk = StCriticalChecker(G)
    return all(chk.check(p) is not None for p in parts)


@dataclass
class PartitionMergeReport:
    lhs: bool
    rhs: bool
    merged_parts: tuple[int, ...]
    graph: Graph

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def verify_partition_merge(G: Graph, parts_g, H: Graph, parts_h) -> PartitionMergeReport:
    """Both families are st-critical partitions iff the merged family
    ``{X1..Xk, Y2..Yl}`` is one of ``G ._{X1 Y1} H``."""
    if parts_g[0].bit_count() != parts_h[0].bit_count():
        raise GraphError("first parts must have equal size")
    co = vertex_set_coalescence(CoalescenceSpec(G, H, _pairs_between(parts_g[0], parts_h[0])))
    merged = merge_partitions(co, parts_g, parts_h)
    lhs = _is_st_partition(G, parts_g) and _is_st_partition(H, parts_h)
    rhs = _is_st_partition(co.graph, merged)
    return PartitionMergeReport(lhs, rhs, merged, co.graph)


@dataclass
class IdentificationReport:
    gamma_j: int
    gamma_merged: int
    compatible: bool
    x_critical: bool
    y_critical: bool

    @property
    def sandwich_ok(self) -> bool:
        return self.gamma_j - 1 <= self.gamma_merged <= self.gamma_j

    @property
    def iff_ok(self) -> bool:
        characterised = not self.compatible and not self.x_critical and not self.y_critical
        return (self.gamma_merged == self.gamma_j) == characterised

    @property
    def ok(self) -> bool:
        return self.sandwich_ok and self.iff_ok


def verify_identification(J: Graph, x: int, y: int) -> IdentificationReport:
    from .criticality import compatibility

    merged, _ = identify_vertices(J, x, y)
    chk = StCriticalChecker(J)
    return IdentificationReport(
        gamma_j=chk.gamma,
        gamma_merged=gamma(merged).gamma,
        compatible=compatibility(J, x, y).compatible,
        x_critical=chk.is_critical(x),
        y_critical=chk.is_critical(y),
    )

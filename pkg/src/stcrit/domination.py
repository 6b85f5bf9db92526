"""Exact domination numbers.

The solver is a set-cover branch and bound over closed neighbourhoods:

* branch on the undominated vertex with the fewest remaining candidate
  dominators (a vertex with one candidate is thereby forced), trying
  candidates in decreasing coverage order;
* after a candidate's branch is exhausted it is excluded from its siblings,
  so every dominating set is reached along exactly one path;
* lower bound: undominated vertices whose candidate sets are pairwise
  disjoint each need their own dominator (at the root this is a 2-packing);
* upper bound: a greedy cover seeds the incumbent.

All functions accept ``within``, a vertex mask: the computation then runs on
the induced subgraph ``G[within]`` without relabelling, so witnesses stay in
the caller's numbering. ``G[empty]`` has domination number 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, components, iter_bits, members

DEFAULT_MDS_LIMIT = 10_000


@dataclass(frozen=True)
class GammaCertificate:
    gamma: int
    witness: int

    def vertices(self) -> list[int]:
        return members(self.witness)


def is_dominating(G: Graph, D: int, within: int | None = None) -> bool:
    if within is None:
        G.check_set(D)
        within = G.full
    if D & ~within:
        return False
    covered = D
    for v in iter_bits(D):
        covered |= G.adj[v]
    return covered & within == within


def _closed_within(G: Graph, within: int) -> list[int]:
    return [(G.adj[v] | (1 << v)) & within if within >> v & 1 else 0 for v in range(G.n)]


def _bound_packing(closed: list[int], undom: int, avail: int) -> int:
    """Undominated vertices with pairwise disjoint candidate sets, fewest candidates first."""
    cands = sorted(((closed[u] & avail).bit_count(), u) for u in iter_bits(undom))
    used = 0
    picked = 0
    for _, u in cands:
        c = closed[u] & avail
        if not c & used:
            used |= c
            picked |= 1 << u
    return picked


def _lower_bound(closed: list[int], undom: int, avail: int) -> int:
    return _bound_packing(closed, undom, avail).bit_count()


def root_packing(G: Graph, within: int | None = None) -> int:
    """The packing behind the root lower bound; a 2-packing of G[within]."""
    within = _resolve(G, within)
    return _bound_packing(_closed_within(G, within), within, within)


def _greedy(closed: list[int], undom: int, avail: int) -> int | None:
    chosen = 0
    while undom:
        best_v, best_c = -1, 0
        for v in iter_bits(avail):
            c = (closed[v] & undom).bit_count()
            if c > best_c:
                best_v, best_c = v, c
        if best_v < 0:
            return None
        chosen |= 1 << best_v
        undom &= ~closed[best_v]
    return chosen


class _Cover:
    """Depth-first cover search over one undominated target set."""

    def __init__(self, closed: list[int]):
        self.closed = closed

    def _branch_vertex(self, undom: int, avail: int) -> tuple[int, int]:
        closed = self.closed
        best_u, best_c = -1, 1 << 30
        for u in iter_bits(undom):
            c = (closed[u] & avail).bit_count()
            if c < best_c:
                best_u, best_c = u, c
                if c <= 1:
                    break
        return best_u, best_c

    def _options(self, u: int, undom: int, avail: int) -> list[int]:
        closed = self.closed
        opts = [(-(closed[v] & undom).bit_count(), v) for v in iter_bits(closed[u] & avail)]
        opts.sort()
        return [v for _, v in opts]

    def minimum(self, undom: int, avail: int, upper: int | None = None) -> tuple[int, int] | None:
        """Smallest cover of ``undom`` from ``avail``, restricted to size < ``upper``."""
        closed = self.closed
        greedy = _greedy(closed, undom, avail)
        if greedy is None:
            return None
        best = [greedy.bit_count(), greedy]
        if upper is not None and best[0] >= upper:
            best = [upper, None]

        def dfs(undom: int, avail: int, chosen: int, size: int) -> None:
            if not undom:
                if size < best[0]:
                    best[0], best[1] = size, chosen
                return
            if size + _lower_bound(closed, undom, avail) >= best[0]:
                return
            u, c = self._branch_vertex(undom, avail)
            if c == 0:
                return
            for v in self._options(u, undom, avail):
                dfs(undom & ~closed[v], avail, chosen | (1 << v), size + 1)
                avail &= ~(1 << v)
                if size + 1 >= best[0]:
                    return

        if best[1] is None or best[0] > _lower_bound(closed, undom, avail):
            dfs(undom, avail, 0, 0)
        if best[1] is None:
            return None
        return best[0], best[1]

    def all_of_size(self, undom: int, avail: int, k: int, limit: int) -> tuple[list[int], bool]:
        """Covers of size at most ``k``; with ``k`` minimal these are exact."""
        closed = self.closed
        found: list[int] = []
        truncated = [False]

        def dfs(undom: int, avail: int, chosen: int, size: int) -> bool:
            if not undom:
                if len(found) >= limit:
                    truncated[0] = True
                    return False
                found.append(chosen)
                return True
            if size + _lower_bound(closed, undom, avail) > k:
                return True
            u, c = self._branch_vertex(undom, avail)
            if c == 0:
                return True
            for v in self._options(u, undom, avail):
                if not dfs(undom & ~closed[v], avail, chosen | (1 << v), size + 1):
                    return False
                avail &= ~(1 << v)
            return True

        dfs(undom, avail, 0, 0)
        return found, truncated[0]


def _resolve(G: Graph, within: int | None) -> int:
    if within is None:
        return G.full
    G.check_set(within)
    return within


def gamma(G: Graph, within: int | None = None) -> GammaCertificate:
    """Exact domination number of ``G[within]`` with one minimum dominating set."""
    within = _resolve(G, within)
    closed = _closed_within(G, within)
    solver = _Cover(closed)
    total, witness = 0, 0
    for comp in components(G, within):
        size, cover = solver.minimum(comp, comp)
        total += size
        witness |= cover
    return GammaCertificate(total, witness)


def gamma_value(G: Graph, within: int | None = None) -> int:
    return gamma(G, within).gamma


def dominating_set_at_most(G: Graph, k: int, within: int | None = None,
                           fixed: int = 0) -> int | None:
    """A dominating set of ``G[within]`` of size <= ``k`` containing ``fixed``, or None."""
    within = _resolve(G, within)
    if fixed & ~within:
        return None
    k -= fixed.bit_count()
    if k < 0:
        return None
    closed = _closed_within(G, within)
    undom = within
    for v in iter_bits(fixed):
        undom &= ~closed[v]
    if not undom:
        return fixed
    res = _Cover(closed).minimum(undom, within, upper=k + 1)
    if res is None:
        return None
    return fixed | res[1]


@dataclass(frozen=True)
class MdsList:
    sets: tuple[int, ...]
    truncated: bool

    def __iter__(self):
        return iter(self.sets)

    def __len__(self):
        return len(self.sets)


def all_mds(G: Graph, limit: int = DEFAULT_MDS_LIMIT, within: int | None = None) -> MdsList:
    """Every minimum dominating set, sorted by bitmask value, cut at ``limit``."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    within = _resolve(G, within)
    if within == 0:
        return MdsList((0,), False)
    closed = _closed_within(G, within)
    k = gamma(G, within).gamma
    found, truncated = _Cover(closed).all_of_size(within, within, k, limit)
    return MdsList(tuple(sorted(found)), truncated)


def brute_force_gamma(G: Graph, within: int | None = None) -> GammaCertificate:
    """Oracle: try every subset in increasing size, first dominating one wins."""
    within = _resolve(G, within)
    verts = members(within)
    closed = {v: {v} | {u for u in G.neighbors(v) if within >> u & 1} for v in verts}
    target = set(verts)
    for k in range(len(verts) + 1):
        for combo in combinations(verts, k):
            covered = set()
            for v in combo:
                covered |= closed[v]
            if covered == target:
                mask = 0
                for v in combo:
                    mask |= 1 << v
                return GammaCertificate(k, mask)
    raise AssertionError("unreachable: the whole vertex set dominates")


def gamma_union(G1: Graph, G2: Graph) -> int:
    """γ(G1 ∪ G2) for disjoint graphs, computed per component."""
    return gamma(G1).gamma + gamma(G2).gamma


def verify_certificate(G: Graph, cert: GammaCertificate, within: int | None = None) -> bool:
    """Witness dominates and has size gamma, and no smaller dominating set exists."""
    within = _resolve(G, within)
    if cert.witness.bit_count() != cert.gamma or not is_dominating(G, cert.witness, within):
        return False
    if cert.gamma == 0:
        return within == 0
    return dominating_set_at_most(G, cert.gamma - 1, within) is None

"""Critical vertices, strong critical vertex-sets and related predicates.

A set ``S`` is st-critical in ``G`` when ``γ(G - S) = γ(G) - |S|``. Since
``γ(G - S) >= γ(G) - |S|`` always holds, it is enough to look for a
dominating set of ``G - S`` of size ``γ(G) - |S|``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .domination import all_mds, dominating_set_at_most, gamma
from .graph import Graph, GraphError, bit, closed_neighborhood, iter_bits, lowest, members, open_neighborhood


@dataclass(frozen=True)
class StCriticalCertificate:
    """``witness`` is a minimum dominating set of ``G - set`` (original ids)."""

    set: int
    witness: int

    def as_dict(self) -> dict:
        return {"set": members(self.set), "witness": members(self.witness)}


@dataclass(frozen=True)
class CompatibilityVerdict:
    pair: tuple[int, int]
    compatible: bool
    witness: int | None = None


@dataclass(frozen=True)
class TwoColoredGammaSet:
    d1: int
    d2: int

    @property
    def dominating_set(self) -> int:
        return self.d1 | self.d2


class StCriticalChecker:
    """Caches γ(G) and st-criticality verdicts by bitmask for one graph."""

    def __init__(self, G: Graph):
        self.G = G
        self.cert = gamma(G)
        self.gamma = self.cert.gamma
        self._cache: dict[int, StCriticalCertificate | None] = {}

    def check(self, S: int) -> StCriticalCertificate | None:
        """Certificate for ``S`` or None; ``S = V(G)`` counts only when γ(G) = n."""
        if S in self._cache:
            return self._cache[S]
        G = self.G
        if S == G.full:
            res = StCriticalCertificate(S, 0) if self.gamma == G.n else None
        elif S.bit_count() >= self.gamma or not is_two_packing(G, S):
            res = None
        else:
            budget = self.gamma - S.bit_count()
            D = dominating_set_at_most(G, budget, within=G.full & ~S)
            res = None if D is None else StCriticalCertificate(S, D)
        self._cache[S] = res
        return res

    def is_critical(self, v: int) -> bool:
        return self.check(bit(v)) is not None

    def critical_vertices(self) -> list[int]:
        return [v for v in range(self.G.n) if self.is_critical(v)]


def gamma_after_deletion(G: Graph, S: int) -> int:
    """γ(G - S), with γ of the empty remainder taken as 0."""
    return gamma(G, within=G.full & ~S).gamma


def is_critical_vertex(G: Graph, v: int) -> bool:
    """γ(G - v) <= γ(G) - 1. By convention the single vertex of K1 is critical."""
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} out of range")
    return StCriticalChecker(G).is_critical(v)


def critical_vertices(G: Graph) -> list[int]:
    return StCriticalChecker(G).critical_vertices()


def is_vertex_critical(G: Graph) -> bool:
    chk = StCriticalChecker(G)
    return all(chk.is_critical(v) for v in range(G.n))


def is_two_packing(G: Graph, M: int) -> bool:
    """Pairwise distance > 2, i.e. pairwise disjoint closed neighbourhoods."""
    seen = 0
    for v in iter_bits(M):
        c = G.adj[v] | (1 << v)
        if c & seen:
            return False
        seen |= c
    return True


def is_st_critical(G: Graph, S: int, checker: StCriticalChecker | None = None) -> StCriticalCertificate | None:
    G.check_set(S)
    if S == 0:
        raise GraphError("st-criticality needs a non-empty set")
    if S == G.full:
        raise GraphError("st-criticality of the whole vertex set is undefined (empty remainder)")
    return (checker or StCriticalChecker(G)).check(S)


def enumerate_st_critical_sets(G: Graph, max_size: int | None = None,
                               checker: StCriticalChecker | None = None) -> list[StCriticalCertificate]:
    """All proper st-critical sets of size <= ``max_size``, ordered by (size, members).

    Sets grow one larger vertex at a time as 2-packings; a failing set is not
    extended, since every subset of an st-critical set is st-critical.
    """
    chk = checker or StCriticalChecker(G)
    cap = chk.gamma - 1 if max_size is None else min(max_size, chk.gamma - 1)
    found: list[StCriticalCertificate] = []

    def grow(S: int, top: int, blocked: int) -> None:
        if S.bit_count() >= cap:
            return
        for w in range(top + 1, G.n):
            if blocked >> w & 1:
                continue
            T = S | (1 << w)
            cert = chk.check(T)
            if cert is None:
                continue
            found.append(cert)
            grow(T, w, blocked | G.adj[w] | (1 << w) | _second_nbhd(G, w))

    grow(0, -1, 0)
    found.sort(key=lambda c: (c.set.bit_count(), members(c.set)))
    return found


def _second_nbhd(G: Graph, w: int) -> int:
    return open_neighborhood(G, G.adj[w])


def compatibility(J: Graph, x: int, y: int) -> CompatibilityVerdict:
    """Whether some minimum dominating set of ``J`` holds both ``x`` and ``y``."""
    if x == y:
        raise GraphError("compatibility needs two distinct vertices")
    g = gamma(J).gamma
    D = dominating_set_at_most(J, g, fixed=bit(x) | bit(y))
    return CompatibilityVerdict((x, y), D is not None, D)


def find_two_colored_gamma_sets(G: Graph, limit: int = 10_000) -> list[TwoColoredGammaSet]:
    """Splits ``D = D1 ∪ D2`` of minimum dominating sets with
    ``V - N[D1] = D2`` and ``V - N[D2] = D1``; both parts non-empty and
    ``D1`` holding the smallest vertex of ``D``."""
    out = []
    full = G.full
    for D in all_mds(G):
        first = lowest(D)
        rest = members(D & ~bit(first))
        for r in range(len(rest)):
            for extra in combinations(rest, r):
                d1 = bit(first)
                for v in extra:
                    d1 |= bit(v)
                d2 = D & ~d1
                if full & ~closed_neighborhood(G, d1) == d2 and full & ~closed_neighborhood(G, d2) == d1:
                    out.append(TwoColoredGammaSet(d1, d2))
                    if len(out) >= limit:
                        return out
    return out


def has_two_colored_gamma_set(G: Graph) -> bool:
    return bool(find_two_colored_gamma_sets(G, limit=1))


def is_generalized_comb(G: Graph) -> bool:
    """Connected, n >= 2, and every vertex of degree > 1 has exactly one
    degree-1 neighbour. K2 qualifies vacuously."""
    from .graph import is_connected

    if G.n < 2 or not is_connected(G):
        return False
    leaves = 0
    for v in range(G.n):
        if G.degree(v) == 1:
            leaves |= bit(v)
    return all(
        (G.adj[v] & leaves).bit_count() == 1 for v in range(G.n) if G.degree(v) > 1
    )


# -- structure audits -----------------------------------------------------------


@dataclass
class StructureAudit:
    """Outcome of auditing one st-critical set; ``violations`` lists failing tuples."""

    set: int
    checked: dict[str, int] = field(default_factory=dict)
    violations: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def _tick(self, name: str) -> None:
        self.checked[name] = self.checked.get(name, 0) + 1


def audit_structure(G: Graph, cert: StCriticalCertificate, mds_limit: int = 10_000) -> StructureAudit:
    """Check, for one st-critical set S of G:

    * every minimum dominating set of G - S avoids N(S);
    * outside-neighbour: each w outside S with a neighbour z in S has another neighbour v0
      with no neighbour in S;
    * path-degree: no path or cycle u-v-w-z with u, z in S has deg(w) <= 2;
    * single-hit: if X = N(w) has 2 or 3 vertices all touching S, then N(X) meets S once;
    * trail-closes: a trail u-v-w-y-z with u, z in S and deg(w) = 2 has u = z.
    """
    S = cert.set
    audit = StructureAudit(S)
    rest = G.full & ~S
    NS = open_neighborhood(G, S)

    if cert.witness & NS:
        audit.violations.append(("mds-avoids-neighbourhood", "stored-witness", members(cert.witness)))
    if rest:
        for D in all_mds(G, limit=mds_limit, within=rest):
            audit._tick("mds-avoids-neighbourhood")
            if D & NS:
                audit.violations.append(("mds-avoids-neighbourhood", members(D)))

    touches = [bool(G.adj[v] & S) for v in range(G.n)]
    for w in iter_bits(rest):
        Nw = G.adj[w]

        for z in iter_bits(Nw & S):
            audit._tick("outside-neighbour")
            if not any(not touches[v0] for v0 in iter_bits(Nw & ~bit(z))):
                audit.violations.append(("outside-neighbour", w, z))
        # u-v-w-z with u,z in S; u == z allowed
        for v in iter_bits(Nw):
            for z in iter_bits(Nw & S & ~bit(v)):
                for u in iter_bits(G.adj[v] & S & ~bit(w)):
                    audit._tick("path-degree")
                    if G.degree(w) <= 2:
                        audit.violations.append(("path-degree", u, v, w, z))

        k = Nw.bit_count()
        if 2 <= k <= 3 and all(touches[x] for x in iter_bits(Nw)):
            audit._tick("single-hit")
            hit = open_neighborhood(G, Nw) & S
            if hit.bit_count() != 1:
                audit.violations.append(("single-hit", w, members(Nw), members(hit)))
        # trail u-v-w-y-z, edges uv, vw, wy, yz pairwise distinct
        if G.degree(w) == 2:
            a, b = members(Nw)
            for v, y in ((a, b), (b, a)):
                for u in iter_bits(G.adj[v] & S):
                    for z in iter_bits(G.adj[y] & S):
                        if {u, v} == {y, z}:
                            continue
                        audit._tick("trail-closes")
                        if u != z:
                            audit.violations.append(("trail-closes", u, v, w, y, z))
    return audit

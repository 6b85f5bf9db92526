"""Seeded randomized and exhaustive sweeps over the structural results.

Each sweep returns a ``SweepReport`` that lists every violation found; a
correct implementation of a true statement reports none.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .census import connected_graphs, generate_connected
from .coalescence import (
    build_c4_power, verify_identification, verify_set_coalescence, verify_partition_merge,
    verify_vertex_coalescence,
)
from .criticality import (
    StCriticalChecker, audit_structure, enumerate_st_critical_sets,
    find_two_colored_gamma_sets, is_two_packing,
)
from .domination import brute_force_gamma, gamma, is_dominating
from .formats import write_graph6
from .graph import Graph, circulant, cycle, harary, members
from .partition import achievable_part_counts, find_partition


@dataclass
class SweepReport:
    check: str
    trials: int = 0
    seed: int | None = None
    violations: list[dict] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "pass" if not self.violations else "fail"

    def tick(self, key: str, k: int = 1) -> None:
        self.counts[key] = self.counts.get(key, 0) + k

    def as_dict(self) -> dict:
        return {
            "check": self.check,
            "trials": self.trials,
            "seed": self.seed,
            "counts": dict(sorted(self.counts.items())),
            "violations": self.violations,
            "verdict": self.verdict,
        }


# -- random graphs ---------------------------------------------------------------


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Random spanning tree plus independent extra edges with probability p."""
    edges = set()
    for v in range(1, n):
        u = rng.randrange(v)
        edges.add((u, v))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, [(perm[u], perm[v]) for u, v in edges])


def _random_subset(rng: random.Random, n: int, k: int) -> int:
    out = 0
    for v in rng.sample(range(n), k):
        out |= 1 << v
    return out


# -- solver against oracle ---------------------------------------------------------


def sweep_gamma_oracle(n_max: int = 7, trials: int = 200, seed: int = 0,
                       n_lo: int = 8, n_hi: int = 12) -> SweepReport:
    """Exhaustive up to ``n_max``, then ``trials`` random graphs of order n_lo..n_hi."""
    rep = SweepReport("gamma-oracle", trials, seed)
    for G in connected_graphs(1, n_max):
        rep.tick("exhaustive")
        a, b = gamma(G), brute_force_gamma(G)
        if a.gamma != b.gamma or not is_dominating(G, a.witness):
            rep.violations.append({"g6": write_graph6(G), "gamma": a.gamma, "brute": b.gamma})
    rng = random.Random(seed)
    for _ in range(trials):
        G = random_graph(rng, rng.randint(n_lo, n_hi), rng.uniform(0.1, 0.6))
        rep.tick("random")
        a, b = gamma(G), brute_force_gamma(G)
        if a.gamma != b.gamma or not is_dominating(G, a.witness):
            rep.violations.append({"g6": write_graph6(G), "gamma": a.gamma, "brute": b.gamma})
    return rep


# -- per-graph structural properties ---------------------------------------------------


def _gamma_within(G: Graph, within: int) -> int:
    return gamma(G, within=within).gamma


def property_checks(G: Graph, rep: SweepReport, subset_samples: int | None = None,
                 rng: random.Random | None = None) -> None:
    """Every structural property for one graph; violations go into ``rep``.

    With ``subset_samples`` the all-subsets checks are sampled, otherwise exhaustive.
    """
    g6 = write_graph6(G)
    full = G.full
    chk = StCriticalChecker(G)
    g = chk.gamma

    def bad(name: str, **detail) -> None:
        rep.violations.append({"g6": g6, "property": name, **detail})

    sets = enumerate_st_critical_sets(G, checker=chk)
    for cert in sets:
        S = cert.set
        rep.tick("2-packing")
        if not is_two_packing(G, S):
            bad("2-packing", set=members(S))
        audit = audit_structure(G, cert)
        for key, k in audit.checked.items():
            rep.tick(key, k)
        for v in audit.violations:
            bad("structural", set=members(S), tuple=list(map(str, v)))
        # subsets stay st-critical, checked by direct γ computation
        verts = members(S)
        for r in range(1, len(verts)):
            for sub in combinations(verts, r):
                T = sum(1 << v for v in sub)
                rep.tick("subset-closure")
                if _gamma_within(G, full & ~T) != g - r:
                    bad("subset-closure", set=members(S), subset=list(sub))
        # S1 st-critical in G - S2 for disjoint S1, S2 inside S
        for S1, S2 in _disjoint_pairs(verts):
            rep.tick("disjoint-parts")
            rest = full & ~S2
            if _gamma_within(G, rest & ~S1) != _gamma_within(G, rest) - S1.bit_count():
                bad("disjoint-parts", set=members(S), s1=members(S1), s2=members(S2))

    crit = [chk.is_critical(v) for v in range(G.n)]
    for u in range(G.n):
        if G.degree(u) == 1 and G.n > 1:
            v = members(G.adj[u])[0]
            rep.tick("pendant-neighbour")
            if crit[v]:
                bad("pendant-neighbour", u=u, v=v)

    if G.n > 1:
        for v in range(G.n):
            gv = _gamma_within(G, full & ~(1 << v))
            rep.tick("single-deletion")
            if gv < g - 1 or crit[v] != (gv <= g - 1):
                bad("single-deletion", v=v, gamma_minus_v=gv, gamma=g)

    if subset_samples is None:
        subsets = range(1, full)
    else:
        rng = rng or random.Random(0)
        subsets = [rng.randrange(1, full) for _ in range(subset_samples)] if full > 1 else []
    for S in subsets:
        rep.tick("deletion-lower-bound")
        if _gamma_within(G, full & ~S) < g - S.bit_count():
            bad("deletion-lower-bound", set=members(S))

    for t in find_two_colored_gamma_sets(G):
        rep.tick("two-colored")
        for a, b in ((t.d1, t.d2), (t.d2, t.d1)):
            if chk.check(b) is None or not is_dominating(G, a, full & ~b) or a.bit_count() != g - b.bit_count():
                bad("two-colored", d1=members(t.d1), d2=members(t.d2))


def _disjoint_pairs(verts: list[int]):
    """All (S1, S2) with S1 non-empty, S1 and S2 disjoint subsets of ``verts``."""
    k = len(verts)
    for code in range(3 ** k):
        s1 = s2 = 0
        c = code
        for v in verts:
            c, r = divmod(c, 3)
            if r == 1:
                s1 |= 1 << v
            elif r == 2:
                s2 |= 1 << v
        if s1:
            yield s1, s2


def sweep_structure(n_max: int = 6, trials: int = 60, seed: int = 0, spot_n: int = 7) -> SweepReport:
    """Exhaustive up to ``n_max``, plus ``trials`` sampled graphs of order ``spot_n``."""
    rep = SweepReport("structural-properties", seed=seed)
    for G in connected_graphs(1, n_max):
        rep.trials += 1
        property_checks(G, rep)
    if spot_n and trials:
        rng = random.Random(seed)
        pool = generate_connected(spot_n)
        for G in rng.sample(pool, min(trials, len(pool))):
            rep.trials += 1
            property_checks(G, rep, subset_samples=40, rng=rng)
    return rep


# -- coalescence ----------------------------------------------------------------------


def sweep_vertex_coalescence_random(trials: int = 100, seed: int = 0, n_max: int = 9) -> SweepReport:
    rep = SweepReport("coalescence-bounds", trials, seed)
    rng = random.Random(seed)
    for _ in range(trials):
        G = random_connected_graph(rng, rng.randint(1, n_max), rng.uniform(0.1, 0.6))
        H = random_connected_graph(rng, rng.randint(1, n_max), rng.uniform(0.1, 0.6))
        g, h = rng.randrange(G.n), rng.randrange(H.n)
        r = verify_vertex_coalescence(G, g, H, h)
        rep.tick("coalescences")
        if not r.ok:
            rep.violations.append(_vc_violation(G, g, H, h, r))
    return rep


def _vc_violation(G, g, H, h, r) -> dict:
    return {
        "g": write_graph6(G), "at_g": g, "h": write_graph6(H), "at_h": h,
        "bounds_ok": r.bounds_ok, "equality_ok": r.equality_ok, "iff_ok": r.iff_ok,
    }


def sweep_vertex_coalescence_exhaustive(n_max: int = 5) -> SweepReport:
    """Every coalescence of two connected graphs on at most ``n_max`` vertices.

    ``G ._{gh} H`` and ``H ._{hg} G`` are the same graph, so unordered pairs suffice.
    """
    rep = SweepReport("coalescence-criticality")
    graphs = list(connected_graphs(1, n_max))
    for i, G in enumerate(graphs):
        for H in graphs[i:]:
            for g in range(G.n):
                for h in range(H.n):
                    rep.trials += 1
                    r = verify_vertex_coalescence(G, g, H, h)
                    rep.tick("critical-both" if r.g_critical and r.h_critical else "other")
                    if not r.ok:
                        rep.violations.append(_vc_violation(G, g, H, h, r))
    return rep


def sweep_set_coalescence(trials: int = 100, seed: int = 0, n_max: int = 9, max_size: int = 3) -> SweepReport:
    """Random ``G ._{XY} H`` with |X| <= 3; half the draws pick X, Y among st-critical sets."""
    rep = SweepReport("set-coalescence", trials, seed)
    rng = random.Random(seed)
    done = 0
    while done < trials:
        G = random_connected_graph(rng, rng.randint(2, n_max), rng.uniform(0.1, 0.5))
        H = random_connected_graph(rng, rng.randint(2, n_max), rng.uniform(0.1, 0.5))
        k = rng.randint(1, min(max_size, G.n - 1, H.n - 1))
        if rng.random() < 0.5:
            xs = [c.set for c in enumerate_st_critical_sets(G, k) if c.set.bit_count() == k]
            ys = [c.set for c in enumerate_st_critical_sets(H, k) if c.set.bit_count() == k]
            if not xs or not ys:
                continue
            X, Y = rng.choice(xs), rng.choice(ys)
        else:
            X, Y = _random_subset(rng, G.n, k), _random_subset(rng, H.n, k)
        done += 1
        r = verify_set_coalescence(G, X, H, Y)
        rep.tick("rhs-true" if r.x_in_co else "rhs-false")
        if not r.ok:
            rep.violations.append({"g": write_graph6(G), "x": members(X), "h": write_graph6(H),
                                   "y": members(Y), **r.as_dict()})
    return rep


def _partitioned_pool() -> list[Graph]:
    pool = [cycle(4), cycle(7), harary(4, 6), build_c4_power(2).graph, circulant(12, (1, 5))]
    pool += [harary(6, 8)]
    return pool


def _random_packing_partition(rng: random.Random, G: Graph) -> list[int]:
    """Random partition of V(G) into 2-packings."""
    order = list(range(G.n))
    rng.shuffle(order)
    parts: list[int] = []
    for v in order:
        opts = [i for i, p in enumerate(parts) if is_two_packing(G, p | (1 << v))]
        if opts and rng.random() < 0.7:
            i = rng.choice(opts)
            parts[i] |= 1 << v
        else:
            parts.append(1 << v)
    return parts


def _random_st_partition(rng: random.Random, G: Graph) -> list[int] | None:
    seqs = achievable_part_counts(G)
    if not seqs.achievable_l:
        return None
    part = find_partition(G, rng.choice(seqs.achievable_l))
    parts = list(part.parts)
    rng.shuffle(parts)
    return parts


def sweep_partition_merge(trials: int = 50, seed: int = 0) -> SweepReport:
    """Random partitioned pairs: genuine st-critical partitions, broken ones,
    and random 2-packing partitions."""
    rep = SweepReport("partition-merge", trials, seed)
    rng = random.Random(seed)
    pool = _partitioned_pool()
    done = 0
    while done < trials:
        kind = rng.choice(("genuine", "genuine", "random"))
        if kind == "genuine":
            G, H = rng.choice(pool), rng.choice(pool)
            pg, ph = _random_st_partition(rng, G), _random_st_partition(rng, H)
        else:
            G = random_connected_graph(rng, rng.randint(3, 8), rng.uniform(0.1, 0.5))
            H = rng.choice(pool) if rng.random() < 0.5 else random_connected_graph(rng, rng.randint(3, 8), 0.3)
            pg, ph = _random_packing_partition(rng, G), _random_packing_partition(rng, H)
        if pg is None or ph is None or G.n + H.n > 64:
            continue
        pairs = [(i, j) for i, a in enumerate(pg) for j, b in enumerate(ph) if a.bit_count() == b.bit_count()]
        if not pairs:
            continue
        i, j = rng.choice(pairs)
        pg = [pg[i]] + pg[:i] + pg[i + 1:]
        ph = [ph[j]] + ph[:j] + ph[j + 1:]
        done += 1
        r = verify_partition_merge(G, pg, H, ph)
        rep.tick(f"{kind}-{'lhs' if r.lhs else 'nolhs'}")
        if not r.ok:
            rep.violations.append({"g": write_graph6(G), "parts_g": [members(p) for p in pg],
                                   "h": write_graph6(H), "parts_h": [members(p) for p in ph],
                                   "lhs": r.lhs, "rhs": r.rhs})
    return rep


def sweep_identification(trials: int = 100, seed: int = 0, n_max: int = 9) -> SweepReport:
    rep = SweepReport("identification", trials, seed)
    rng = random.Random(seed)
    for _ in range(trials):
        J = random_graph(rng, rng.randint(2, n_max), rng.uniform(0.1, 0.6))
        x, y = rng.sample(range(J.n), 2)
        r = verify_identification(J, x, y)
        rep.tick("equal" if r.gamma_merged == r.gamma_j else "drop")
        if not r.ok:
            rep.violations.append({"j": write_graph6(J), "x": x, "y": y, "gamma_j": r.gamma_j,
                                   "gamma_merged": r.gamma_merged, "compatible": r.compatible,
                                   "x_critical": r.x_critical, "y_critical": r.y_critical})
    return rep


# -- partition structure ----------------------------------------------------------------


def sweep_partition_structure(n_max: int = 6) -> SweepReport:
    """Part counts form an interval ending at n, non-empty iff vertex-critical;
    the backtracking search agrees with the exact-cover enumeration."""
    rep = SweepReport("partition-structure")
    for G in connected_graphs(1, n_max):
        rep.trials += 1
        chk = StCriticalChecker(G)
        seqs = achievable_part_counts(G, chk)
        ls = list(seqs.achievable_l)
        vc = all(chk.is_critical(v) for v in range(G.n))
        searched = [l for l in range(1, G.n + 1) if find_partition(G, l, chk, prefilter=False)]
        ok = (bool(ls) == vc) and searched == ls
        if ls:
            ok &= ls == list(range(ls[0], G.n + 1))
        rep.tick("vertex-critical" if vc else "not-vertex-critical")
        if not ok:
            rep.violations.append({"g6": write_graph6(G), "achievable_l": ls, "searched": searched,
                                   "vertex_critical": vc})
    return rep


SWEEPS = {
    "gamma-oracle": sweep_gamma_oracle,
    "structural-properties": sweep_structure,
    "coalescence-bounds": sweep_vertex_coalescence_random,
    "coalescence-criticality": sweep_vertex_coalescence_exhaustive,
    "set-coalescence": sweep_set_coalescence,
    "partition-merge": sweep_partition_merge,
    "identification": sweep_identification,
    "partition-structure": sweep_partition_structure,
}

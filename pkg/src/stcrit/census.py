"""Exhaustive graph streams and the verification campaigns run over them.

Every hit is re-verified with the subset-enumeration γ oracle before it is
reported. Classification can be spread over worker processes; hits are
merged and sorted by graph6 string, so the report does not depend on the
worker count.
"""

from __future__ import annotations

import time
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import IO, Any

from .coalescence import Construction, attach_c4s, build_c4_power
from .criticality import StCriticalChecker, find_two_colored_gamma_sets, is_generalized_comb
from .domination import brute_force_gamma, gamma
from .formats import Graph6Error, parse_graph6, write_graph6
from .graph import (
    Graph, GraphError, bipartition, cartesian_product, circulant, corona, cycle, harary,
    is_connected, k2t2t_minus_4cycles, lowest, members,
)
from .iso import canonical_code, canonical_form, is_isomorphic
from .partition import achievable_part_counts, find_partition, verify_partition

MAX_BUILTIN_N = 9
PASS, FAIL, EXPLORATORY = "pass", "fail", "exploratory"
NONEXISTENCE_LS = frozenset({2, 3, 5})


@dataclass
class CensusReport:
    check: str
    n_range: tuple[int, int]
    examined: int = 0
    hits: list[dict] = field(default_factory=list)
    elapsed_ms: float = 0.0
    verdict: str = EXPLORATORY
    notes: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "check": self.check,
            "n_range": list(self.n_range),
            "examined": self.examined,
            "hits": sorted(self.hits, key=lambda h: h["g6"]),
            "elapsed_ms": round(self.elapsed_ms, 3),
            "verdict": self.verdict,
            "notes": list(self.notes),
        }

    @property
    def passed(self) -> bool:
        return self.verdict != FAIL


# -- graph streams ----------------------------------------------------------------


def _extend(G: Graph, S: int) -> Graph:
    n = G.n
    adj = list(G.adj)
    for v in range(n):
        if S >> v & 1:
            adj[v] |= 1 << n
    adj.append(S)
    return Graph(n + 1, tuple(adj))


@lru_cache(maxsize=None)
def _connected(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    seen: dict[bytes, Graph] = {}
    # every connected graph has a non-cut vertex, so it arises from a
    # connected graph on n-1 vertices plus one vertex with a non-empty neighbourhood
    for G in _connected(n - 1):
        for S in range(1, 1 << (n - 1)):
            code = canonical_code(_extend(G, S))
            if code not in seen:
                seen[code] = parse_graph6(code.decode("ascii"))
    return tuple(seen[c] for c in sorted(seen))


def clear_generation_cache() -> None:
    _connected.cache_clear()
    h48_standin.cache_clear()


def generate_connected(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class of connected graphs on n vertices."""
    if not 1 <= n <= MAX_BUILTIN_N:
        raise GraphError(f"built-in generation supports 1 <= n <= {MAX_BUILTIN_N}, got {n}")
    return list(_connected(n))


def connected_graphs(n_min: int, n_max: int) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from generate_connected(n)


def ingest_graph6(source: IO | Iterable[str | bytes], on_error: str = "abort",
                  errors: list | None = None) -> Iterator[Graph]:
    """Parse newline-delimited graph6 records in order.

    ``on_error="abort"`` raises on the first bad record; ``"skip"`` drops it
    and appends ``(line_number, message)`` to ``errors`` when given.
    """
    if on_error not in ("abort", "skip"):
        raise ValueError(f"on_error must be 'abort' or 'skip', got {on_error!r}")
    for lineno, raw in enumerate(source, 1):
        line = raw.decode("ascii", "replace") if isinstance(raw, bytes) else raw
        line = line.strip()
        if not line or line == ">>graph6<<":
            continue
        try:
            yield parse_graph6(line)
        except GraphError as exc:
            if on_error == "abort":
                raise Graph6Error(f"line {lineno}: {exc}") from None
            if errors is not None:
                errors.append((lineno, str(exc)))


# -- classification plumbing --------------------------------------------------------


def _classify_batch(args: tuple[Callable, list[Graph], tuple]) -> list[dict]:
    fn, graphs, extra = args
    out = []
    for G in graphs:
        finding = fn(G, *extra)
        if finding is not None:
            out.append({"g6": write_graph6(G), "finding": finding})
    return out


def _scan(fn: Callable, graphs: Iterable[Graph], extra: tuple = (), workers: int = 1,
          batch: int = 256) -> tuple[int, list[dict]]:
    graphs = list(graphs)
    if workers <= 1 or len(graphs) <= batch:
        hits = _classify_batch((fn, graphs, extra))
    else:
        chunks = [(fn, graphs[i:i + batch], extra) for i in range(0, len(graphs), batch)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            hits = [h for part in pool.map(_classify_batch, chunks) for h in part]
    hits.sort(key=lambda h: h["g6"])
    return len(graphs), hits


def _source(n_min: int, n_max: int, graphs: Iterable[Graph] | None) -> Iterable[Graph]:
    if graphs is None:
        return connected_graphs(n_min, n_max)
    return [G for G in graphs if n_min <= G.n <= n_max and is_connected(G)]


def _partition_finding(G: Graph, part) -> dict:
    return {
        "l": len(part),
        "parts": part.as_lists(),
        "sizes": list(part.sizes),
        "verified": verify_partition(G, part.parts, oracle="brute"),
    }


# -- part-count checks ------------------------------------------------------------


def _l_hits(G: Graph, ls: tuple[int, ...]) -> dict | None:
    chk = StCriticalChecker(G)
    found = []
    for l in ls:
        if l > G.n:
            continue
        part = find_partition(G, l, chk)
        if part is not None:
            found.append(_partition_finding(G, part))
    if not found:
        return None
    return {"partitions": found}


def check_l_nonexistence(n_max: int, ls: Iterable[int] = NONEXISTENCE_LS, n_min: int = 1,
                         graphs: Iterable[Graph] | None = None, workers: int = 1) -> CensusReport:
    """Connected graphs that split into l st-critical parts for some l in ``ls``.

    With ``ls`` inside {2, 3, 5} the verdict is pass iff there are no hits;
    other ``ls`` are exploratory.
    """
    ls = tuple(sorted(set(ls)))
    t0 = time.perf_counter()
    report = CensusReport(f"l-nonexistence:{','.join(map(str, ls))}", (n_min, n_max))
    report.examined, report.hits = _scan(_l_hits, _source(n_min, n_max, graphs), (ls,), workers)
    unverified = any(not p["verified"] for h in report.hits for p in h["finding"]["partitions"])
    if set(ls) <= NONEXISTENCE_LS:
        report.verdict = PASS if not report.hits else FAIL
    else:
        report.verdict = FAIL if unverified else EXPLORATORY
    report.elapsed_ms = (time.perf_counter() - t0) * 1e3
    return report


def check_c4_uniqueness(n_max: int, graphs: Iterable[Graph] | None = None, workers: int = 1) -> CensusReport:
    """The only connected graph splitting into 4 st-critical parts is C4."""
    t0 = time.perf_counter()
    report = CensusReport("c4-uniqueness", (1, n_max))
    report.examined, report.hits = _scan(_l_hits, _source(1, n_max, graphs), ((4,),), workers)
    c4 = cycle(4)
    for h in report.hits:
        h["finding"]["isomorphic_to_c4"] = is_isomorphic(parse_graph6(h["g6"]), c4)
    all_c4 = all(h["finding"]["isomorphic_to_c4"] for h in report.hits)
    verified = all(p["verified"] for h in report.hits for p in h["finding"]["partitions"])
    if n_max < 4:
        report.notes.append("C4 out of range")
        report.verdict = PASS if not report.hits else FAIL
    else:
        report.verdict = PASS if len(report.hits) == 1 and all_c4 and verified else FAIL
    report.elapsed_ms = (time.perf_counter() - t0) * 1e3
    return report


def c6_member_graphs() -> dict[str, Graph]:
    return {
        "C4.C4": build_c4_power(2).graph,
        "harary(4,6)": harary(4, 6),
        "circulant(12,{1,5})": circulant(12, (1, 5)),
    }


def check_c6_members() -> CensusReport:
    """Each named graph is connected and splits into 6 st-critical parts."""
    t0 = time.perf_counter()
    graphs = c6_member_graphs()
    report = CensusReport("c6-members", (min(G.n for G in graphs.values()), max(G.n for G in graphs.values())))
    ok = True
    for name, G in graphs.items():
        report.examined += 1
        part = find_partition(G, 6)
        finding: dict[str, Any] = {"name": name, "connected": is_connected(G), "member": part is not None}
        if part is not None:
            finding.update(_partition_finding(G, part))
        ok &= finding["connected"] and finding["member"] and finding.get("verified", False)
        report.hits.append({"g6": write_graph6(G), "finding": finding})
    report.verdict = PASS if ok else FAIL
    report.elapsed_ms = (time.perf_counter() - t0) * 1e3
    return report


# -- H_{4,8} stand-in ---------------------------------------------------------------


def _vertex_critical_finding(G: Graph) -> dict | None:
    chk = StCriticalChecker(G)
    if not all(chk.is_critical(v) for v in range(G.n)):
        return None
    g = brute_force_gamma(G).gamma
    verified = all(brute_force_gamma(G, G.full & ~(1 << v)).gamma == g - 1 for v in range(G.n))
    degs = sorted(G.degrees(), reverse=True)
    return {"gamma": g, "degrees": degs, "regular": degs[0] == degs[-1], "verified": verified}


def standard_harary_48() -> Graph:
    return harary(4, 8)


def reconstruct_h48(workers: int = 1) -> CensusReport:
    """All vertex-critical connected graphs on 8 vertices, and the chosen stand-in.

    The stand-in is the hit with the least canonical code among the 4-regular
    hits, or among all hits if none is 4-regular.
    """
    t0 = time.perf_counter()
    report = CensusReport("h48-reconstruction", (8, 8))
    report.examined, report.hits = _scan(_vertex_critical_finding, generate_connected(8), (), workers)
    harary48 = standard_harary_48()
    in_hits = False
    for h in report.hits:
        G = parse_graph6(h["g6"])
        h["finding"]["is_standard_harary_c8_1_2"] = is_isomorphic(G, harary48)
        in_hits |= h["finding"]["is_standard_harary_c8_1_2"]
    if report.hits:
        pick = _pick_standin(report.hits)
        pick["finding"]["standin"] = True
        report.notes.append(f"stand-in: {pick['g6']}")
    report.notes.append(f"C8<1,2> among hits: {str(in_hits).lower()}")
    verified = all(h["finding"]["verified"] for h in report.hits)
    report.verdict = PASS if report.hits and not in_hits and verified else FAIL
    report.elapsed_ms = (time.perf_counter() - t0) * 1e3
    return report


def _pick_standin(hits: list[dict]) -> dict:
    quartic = [h for h in hits if h["finding"]["degrees"] == [4] * 8]
    pool = quartic or hits
    return min(pool, key=lambda h: canonical_code(parse_graph6(h["g6"])))


@lru_cache(maxsize=1)
def h48_standin() -> Graph:
    report = reconstruct_h48()
    if not report.hits:
        raise RuntimeError("no vertex-critical connected graph on 8 vertices")
    return canonical_form(parse_graph6(_pick_standin(report.hits)["g6"]))


# -- existence constructions ---------------------------------------------------------


def build_family(l: int, h48: Graph | None = None) -> Construction:
    """Connected graph with a tracked partition into ``l`` st-critical parts.

    K1 for l = 1; (C4)^k for l = 3k+1; (C4)^k using a 6-part partition of
    (C4)^2 for l = 3k; the H_{4,8} stand-in with k-2 C4s attached for l = 3k+2.
    """
    if l in NONEXISTENCE_LS or l < 1:
        raise GraphError(f"no connected graph splits into {l} st-critical parts")
    if l == 1:
        return Construction(Graph(1, (0,)), (1,))
    k, r = divmod(l, 3)
    if r == 1:
        return build_c4_power(k)
    if r == 0:
        base = build_c4_power(2).graph
        six = find_partition(base, 6)
        return attach_c4s(base, six.parts, 0, k - 2)
    h48 = h48 if h48 is not None else h48_standin()
    singletons = tuple(1 << v for v in range(h48.n))
    return attach_c4s(h48, singletons, 0, k - 2)


def verify_family_sufficiency(l: int, h48: Graph | None = None) -> CensusReport:
    t0 = time.perf_counter()
    fam = build_family(l, h48)
    G = fam.graph
    report = CensusReport(f"family-sufficiency:{l}", (G.n, G.n), examined=1)
    ok = is_connected(G) and len(fam.parts) == l and verify_partition(G, fam.parts)
    report.hits.append({
        "g6": write_graph6(G),
        "finding": {"l": l, "n": G.n, "parts": [members(p) for p in fam.parts], "verified": ok},
    })
    report.verdict = PASS if ok else FAIL
    report.elapsed_ms = (time.perf_counter() - t0) * 1e3
    return report


# -- products with generalized combs -------------------------------------------------


def comb_graphs(n_comb_max: int) -> list[Graph]:
    return [corona(B) for B in connected_graphs(1, n_comb_max // 2)]


def two_colored_graphs(n_h_max: int) -> list[Graph]:
    return [H for H in connected_graphs(1, n_h_max) if find_two_colored_gamma_sets(H, limit=1)]


def _product_violation(G: Graph, H: Graph) -> dict | None:
    gg, gh = gamma(G).gamma, gamma(H).gamma
    gp = gamma(cartesian_product(G, H)).gamma
    if gp == gg * gh:
        return None
    return {"comb": write_graph6(G), "h": write_graph6(H), "gamma_comb": gg, "gamma_h": gh, "gamma_product": gp}


def _comb_batch(args) -> tuple[int, list]:
    G, hs = args
    out = []
    for H in hs:
        v = _product_violation(G, H)
        if v is not None:
            out.append(v)
    return len(hs), out


def check_vizing_comb(n_comb_max: int = 8, n_h_max: int = 6, workers: int = 1) -> CensusReport:
    """γ(G □ H) = γ(G) γ(H) for combs G and graphs H with a two-colored γ-set."""
    t0 = time.perf_counter()
    report = CensusReport("vizing-comb", (1, max(n_comb_max, n_h_max)))
    combs = comb_graphs(n_comb_max)
    hs = two_colored_graphs(n_h_max)
    bad_combs = [write_graph6(G) for G in combs if not is_generalized_comb(G)]
    jobs = [(G, hs) for G in combs]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_comb_batch, jobs))
    else:
        results = [_comb_batch(j) for j in jobs]
    for count, violations in results:
        report.examined += count
        for v in violations:
            report.hits.append({"g6": v["comb"] + ":" + v["h"], "finding": v})
    report.notes.append(f"combs: {len(combs)}, two-colored graphs: {len(hs)}")
    if bad_combs:
        report.notes.append(f"corona outputs failing the comb recognizer: {bad_combs}")
    report.verdict = PASS if not report.hits and not bad_combs else FAIL
    report.elapsed_ms = (time.perf_counter() - t0) * 1e3
    return report


# -- exploratory searches ------------------------------------------------------------


def two_colored_partition(G: Graph) -> list[int] | None:
    """Partition of V(G) into vertex sets of two-colored γ-sets, or None."""
    sets = sorted({t.dominating_set for t in find_two_colored_gamma_sets(G)})
    if not sets or G.n % sets[0].bit_count():
        return None
    chosen: list[int] = []

    def cover(rest: int) -> bool:
        if not rest:
            return True
        v = lowest(rest)
        for D in sets:
            if D >> v & 1 and not D & ~rest:
                chosen.append(D)
                if cover(rest & ~D):
                    return True
                chosen.pop()
        return False

    return list(chosen) if cover(G.full) else None


def _bipartite_finding(G: Graph, family: tuple[tuple[int, Graph], ...]) -> dict | None:
    if bipartition(G) is None:
        return None
    parts = two_colored_partition(G)
    if parts is None:
        return None
    is_c4 = is_isomorphic(G, cycle(4))
    fam_t = next((t for t, F in family if F.n == G.n and is_isomorphic(G, F)), None)
    return {
        "partition": [members(p) for p in parts],
        "is_c4": is_c4,
        "family_t": fam_t,
        "counterexample_candidate": not is_c4 and fam_t is None,
    }


def explore_conjecture_bipartite(n_max: int = 8, workers: int = 1) -> CensusReport:
    """Connected bipartite graphs whose vertices split into two-colored γ-sets."""
    t0 = time.perf_counter()
    report = CensusReport("bipartite-two-colored", (1, n_max))
    family = tuple((t, k2t2t_minus_4cycles(t)) for t in range(3, n_max // 4 + 1))
    report.examined, report.hits = _scan(_bipartite_finding, connected_graphs(1, n_max), (family,), workers)
    flagged = [h["g6"] for h in report.hits if h["finding"]["counterexample_candidate"]]
    report.notes.append(f"counterexample candidates: {len(flagged)}")
    if not family:
        report.notes.append("no K_{2t,2t} minus t 4-cycles member is connected within range")
    report.verdict = EXPLORATORY
    report.elapsed_ms = (time.perf_counter() - t0) * 1e3
    return report


def _sequence_finding(G: Graph) -> dict | None:
    chk = StCriticalChecker(G)
    if not all(chk.is_critical(v) for v in range(G.n)):
        return None
    rep = achievable_part_counts(G, chk)
    if len(rep.sequences) < 2:
        return None
    return {"sequences": [list(s) for s in rep.sequences], "achievable_l": list(rep.achievable_l)}


def find_multi_sequence_graph(n_max: int = 8, workers: int = 1, stop_at_first: bool = True) -> CensusReport:
    """Connected graphs with two or more strong critical vertex-sets sequences.

    With ``stop_at_first`` only the smallest order that has any is reported.
    """
    t0 = time.perf_counter()
    report = CensusReport("multi-sequence", (1, n_max))
    for n in range(1, n_max + 1):
        count, hits = _scan(_sequence_finding, generate_connected(n), (), workers)
        report.examined += count
        report.hits.extend(hits)
        if hits and stop_at_first:
            report.notes.append(f"smallest order: {n}")
            report.n_range = (1, n)
            break
    report.verdict = EXPLORATORY
    report.elapsed_ms = (time.perf_counter() - t0) * 1e3
    return report


CHECKS = {
    "l-nonexistence": check_l_nonexistence,
    "c4-uniqueness": check_c4_uniqueness,
    "c6-members": check_c6_members,
    "h48": reconstruct_h48,
    "family": verify_family_sufficiency,
    "vizing-comb": check_vizing_comb,
    "bipartite": explore_conjecture_bipartite,
    "multi-sequence": find_multi_sequence_graph,
}

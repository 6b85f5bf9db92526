"""Partitions of V(G) into strong critical vertex-sets."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .criticality import StCriticalCertificate, StCriticalChecker, enumerate_st_critical_sets
from .domination import brute_force_gamma, gamma
from .graph import Graph, GraphError, bit, lowest, members


@dataclass(frozen=True)
class StCriticalPartition:
    parts: tuple[int, ...]
    certificates: tuple[StCriticalCertificate, ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(sorted((p.bit_count() for p in self.parts), reverse=True))

    def as_lists(self) -> list[list[int]]:
        return [members(p) for p in self.parts]

    def __len__(self):
        return len(self.parts)


@dataclass(frozen=True)
class SequenceReport:
    n: int
    achievable_l: tuple[int, ...]
    sequences: tuple[tuple[int, ...], ...]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "achievable_l": list(self.achievable_l),
            "sequences": [list(s) for s in self.sequences],
        }


def find_partition(G: Graph, l: int, checker: StCriticalChecker | None = None,
                   prefilter: bool = True) -> StCriticalPartition | None:
    """First partition of V(G) into exactly ``l`` st-critical parts, or None.

    Vertices are assigned in id order, each to an existing part (lowest index
    first) or to a new part; a part is only grown while it stays st-critical.
    With ``prefilter`` the search stops at once unless every vertex is
    critical, which any such partition requires (singletons of an
    st-critical part are st-critical).
    """
    n = G.n
    if not 1 <= l <= n:
        raise GraphError(f"part count must be in [1, {n}], got {l}")
    chk = checker or StCriticalChecker(G)
    if n == 1:
        cert = chk.check(G.full)
        return StCriticalPartition((G.full,), (cert,)) if cert else None
    if l == 1:
        return None
    if prefilter and not all(chk.is_critical(v) for v in range(n)):
        return None
    parts: list[int] = []

    def assign(v: int) -> bool:
        if v == n:
            return len(parts) == l
        left = n - v - 1
        for i, p in enumerate(parts):
            if len(parts) + left < l:
                break
            q = p | bit(v)
            if chk.check(q) is not None:
                parts[i] = q
                if assign(v + 1):
                    return True
                parts[i] = p
        if len(parts) < l and len(parts) + 1 + left >= l and chk.check(bit(v)) is not None:
            parts.append(bit(v))
            if assign(v + 1):
                return True
            parts.pop()
        return False

    if not assign(0):
        return None
    return StCriticalPartition(tuple(parts), tuple(chk.check(p) for p in parts))


def is_strong_l_critical(G: Graph, l: int, checker: StCriticalChecker | None = None) -> bool:
    return find_partition(G, l, checker) is not None


def achievable_part_counts(G: Graph, checker: StCriticalChecker | None = None) -> SequenceReport:
    """Every part count and every multiset of part sizes over all partitions.

    Exact cover over the enumerated st-critical sets: the part holding the
    lowest uncovered vertex is chosen among sets whose lowest vertex it is,
    memoized on the uncovered mask.
    """
    n = G.n
    if n == 1:
        chk = checker or StCriticalChecker(G)
        seqs = {(1,)} if chk.check(G.full) else set()
        return _report(n, seqs)
    sets = [c.set for c in enumerate_st_critical_sets(G, checker=checker)]
    by_low: dict[int, list[int]] = {}
    for S in sets:
        by_low.setdefault(lowest(S), []).append(S)

    @lru_cache(maxsize=None)
    def cover(mask: int) -> frozenset:
        if mask == 0:
            return frozenset({()})
        v = lowest(mask)
        out = set()
        for S in by_low.get(v, ()):
            if S & ~mask:
                continue
            size = S.bit_count()
            for seq in cover(mask & ~S):
                out.add(tuple(sorted(seq + (size,), reverse=True)))
        return frozenset(out)

    return _report(n, set(cover(G.full)))


def _report(n: int, seqs: set) -> SequenceReport:
    ordered = tuple(sorted(seqs, key=lambda s: (len(s), s)))
    return SequenceReport(n, tuple(sorted({len(s) for s in seqs})), ordered)


def verify_partition(G: Graph, parts: list[int] | tuple[int, ...], oracle: str = "auto") -> bool:
    """Re-verify a claimed partition from scratch with an independent γ routine.

    ``oracle`` is ``"brute"`` (subset enumeration), ``"bnb"`` (branch and
    bound), or ``"auto"`` (brute force up to 14 vertices).
    """
    solve = _pick_oracle(G, oracle)
    seen = 0
    for p in parts:
        if p == 0 or p & seen or p & ~G.full:
            return False
        seen |= p
    if seen != G.full:
        return False
    g = solve(G, None).gamma
    for p in parts:
        rest = G.full & ~p
        if solve(G, rest).gamma != g - p.bit_count():
            return False
    return True


def _pick_oracle(G: Graph, oracle: str):
    if oracle == "brute" or (oracle == "auto" and G.n <= 14):
        return lambda H, within: brute_force_gamma(H, within)
    return lambda H, within: gamma(H, within)


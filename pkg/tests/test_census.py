import io
from itertools import permutations

import networkx as nx
import numpy as np
import pytest

from stcrit import census
from stcrit.coalescence import build_c4_power
from stcrit.domination import gamma
from stcrit.formats import Graph6Error, parse_graph6, write_graph6
from stcrit.graph import GraphError, cartesian_product, complete, corona, cycle, path
from stcrit.iso import is_isomorphic


def _connected_count_reference(n: int) -> int:
    """Count unlabeled connected graphs by minimizing the edge bitmask over all
    vertex permutations, vectorized over every labeled graph."""
    if n == 1:
        return 1
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    index = {p: i for i, p in enumerate(pairs)}
    codes = np.arange(1 << len(pairs), dtype=np.int64)
    bits = [(codes >> i) & 1 for i in range(len(pairs))]
    # connectivity by repeated neighbourhood expansion from vertex 0
    reach = np.ones_like(codes)
    for _ in range(n):
        new = reach.copy()
        for i, (u, v) in enumerate(pairs):
            new |= ((reach >> u) & 1 & bits[i]) << v
            new |= ((reach >> v) & 1 & bits[i]) << u
        reach = new
    connected = reach == (1 << n) - 1
    best = np.full_like(codes, np.iinfo(np.int64).max)
    for perm in permutations(range(n)):
        img = np.zeros_like(codes)
        for i, (u, v) in enumerate(pairs):
            a, b = sorted((perm[u], perm[v]))
            img |= bits[i] << index[(a, b)]
        best = np.minimum(best, img)
    return len(np.unique(best[connected]))


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
def test_connected_counts(n, count):
    assert len(census.generate_connected(n)) == count
    assert _connected_count_reference(n) == count


def test_generate_connected_range():
    assert [write_graph6(G) for G in census.generate_connected(1)] == ["@"]
    with pytest.raises(GraphError):
        census.generate_connected(10)
    with pytest.raises(GraphError):
        census.generate_connected(0)


def test_ingest_examples():
    src = io.StringIO(">>graph6<<Cr\nC~\n\nA_\n")
    assert len(list(census.ingest_graph6(src))) == 3
    assert list(census.ingest_graph6(io.StringIO(""))) == []
    big = nx.to_graph6_bytes(nx.empty_graph(70), header=False)
    with pytest.raises(Graph6Error):
        list(census.ingest_graph6([big]))


def test_ingest_skip_collects_errors():
    errs = []
    got = list(census.ingest_graph6(["Cr", "bad!", "C~"], on_error="skip", errors=errs))
    assert len(got) == 2 and errs[0][0] == 2


def test_l_nonexistence_small():
    rep = census.check_l_nonexistence(6)
    d = rep.as_dict()
    assert d["verdict"] == "pass" and d["hits"] == [] and d["examined"] == 143
    assert set(d) == {"check", "n_range", "examined", "hits", "elapsed_ms", "verdict", "notes"}


def test_l_exploratory_campaigns():
    four = census.check_l_nonexistence(6, {4})
    assert four.verdict == "exploratory" and len(four.hits) == 1
    assert is_isomorphic(parse_graph6(four.hits[0]["g6"]), cycle(4))
    one = census.check_l_nonexistence(4, {1})
    assert [h["g6"] for h in one.hits] == ["@"]


def test_l_nonexistence_on_external_stream():
    stream = [build_c4_power(2).graph, cycle(4), cycle(7)]
    rep = census.check_l_nonexistence(7, graphs=stream)
    assert rep.examined == 3 and rep.verdict == "pass"


def test_c4_uniqueness_ranges():
    rep = census.check_c4_uniqueness(3)
    assert rep.verdict == "pass" and rep.hits == [] and "C4 out of range" in rep.notes
    rep = census.check_c4_uniqueness(5)
    assert rep.verdict == "pass" and len(rep.hits) == 1


def test_c6_members():
    rep = census.check_c6_members()
    assert rep.verdict == "pass" and rep.examined == 3
    sizes = {h["finding"]["name"]: h["finding"]["sizes"] for h in rep.hits}
    assert sizes["circulant(12,{1,5})"] == [2] * 6
    assert sizes["harary(4,6)"] == [1] * 6
    assert sum(sizes["C4.C4"]) == 7 and len(sizes["C4.C4"]) == 6


@pytest.mark.parametrize("l", [1, 4, 6, 7, 9, 10])
def test_family_without_standin(l):
    assert census.verify_family_sufficiency(l).verdict == "pass"


@pytest.mark.parametrize("l", [2, 3, 5, 0])
def test_family_rejects_impossible(l):
    with pytest.raises(GraphError):
        census.build_family(l)


def test_family_with_explicit_standin():
    # any 8-vertex graph with 8 singleton st-critical parts serves
    h = parse_graph6("GqKsY[")
    assert census.verify_family_sufficiency(8, h).verdict == "pass"
    assert census.verify_family_sufficiency(11, h).verdict == "pass"


def test_vizing_examples():
    for base in (path(1), path(2), path(3)):
        G = corona(base)
        assert gamma(cartesian_product(G, cycle(4))).gamma == gamma(G).gamma * 2
    rep = census.check_vizing_comb(6, 5)
    assert rep.verdict == "pass" and rep.examined > 0


def test_multi_sequence_exclusions():
    assert census._sequence_finding(cycle(4)) is None
    assert census._sequence_finding(complete(1)) is None
    f = census._sequence_finding(build_c4_power(2).graph)
    assert len(f["sequences"]) >= 2


def test_workers_do_not_change_hits():
    a = census.check_l_nonexistence(6, {4, 6}, workers=1).as_dict()
    b = census.check_l_nonexistence(6, {4, 6}, workers=2).as_dict()
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b


def test_bipartite_exploration_small():
    rep = census.explore_conjecture_bipartite(6)
    assert rep.verdict == "exploratory"
    assert [h["finding"]["is_c4"] for h in rep.hits] == [True]

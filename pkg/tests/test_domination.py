from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, two_packings_reference
from stcrit.domination import (
    GammaCertificate, all_mds, brute_force_gamma, dominating_set_at_most, gamma, gamma_union,
    gamma_value, is_dominating, root_packing, verify_certificate,
)
from stcrit.graph import (
    Graph, bit, circulant, complete, complete_bipartite, cycle, disjoint_union, mask_of,
    members, path,
)


def _all_mds_reference(G: Graph) -> list[int]:
    closed = [G.adj[v] | (1 << v) for v in range(G.n)]
    for k in range(1, G.n + 1):
        found = []
        for combo in combinations(range(G.n), k):
            cov = 0
            for v in combo:
                cov |= closed[v]
            if cov == G.full:
                found.append(mask_of(combo))
        if found:
            return sorted(found)
    raise AssertionError


def test_is_dominating_examples():
    C4 = cycle(4)
    assert is_dominating(C4, mask_of([0, 2]))
    assert not is_dominating(C4, bit(0))
    assert is_dominating(C4, C4.full)


def test_gamma_examples():
    assert gamma(cycle(9)).gamma == 3
    assert gamma(path(7)).gamma == 3
    assert gamma(complete(1)).gamma == 1
    c12 = circulant(12, (1, 5))
    assert gamma(c12).gamma == brute_force_gamma(c12).gamma == 4


def test_brute_force_examples():
    assert brute_force_gamma(cycle(4)).gamma == 2
    assert brute_force_gamma(complete_bipartite(3, 3)).gamma == 2


def test_all_mds_examples():
    assert [members(D) for D in all_mds(cycle(4)).sets] == [[0, 1], [0, 2], [1, 2], [0, 3], [1, 3], [2, 3]]
    assert all_mds(complete(1)).sets == (1,)
    assert all_mds(complete_bipartite(1, 4)).sets == (1,)


def test_all_mds_truncation_flag():
    res = all_mds(cycle(4), limit=3)
    assert res.truncated and len(res.sets) == 3
    assert not all_mds(cycle(4)).truncated
    with pytest.raises(ValueError):
        all_mds(cycle(4), limit=0)


def test_gamma_union_examples():
    assert gamma_union(cycle(4), cycle(4)) == 4
    assert gamma_union(complete(1), complete(1)) == 2
    assert gamma_union(path(3), cycle(9)) == 4


def test_within_mask_and_isolated_vertices():
    G = disjoint_union(complete(1), path(3))
    assert gamma(G).gamma == 2
    assert gamma(cycle(6), within=mask_of([0, 2, 4])).gamma == 3
    assert gamma_value(cycle(6), within=0) == 0


def test_dominating_set_at_most():
    C6 = cycle(6)
    assert dominating_set_at_most(C6, 1) is None
    D = dominating_set_at_most(C6, 2, fixed=bit(1))
    assert D is not None and D >> 1 & 1 and is_dominating(C6, D)
    assert dominating_set_at_most(C6, 2, fixed=mask_of([0, 1])) is None


def test_verify_certificate_rejects_wrong_size():
    assert verify_certificate(cycle(4), gamma(cycle(4)))
    assert not verify_certificate(cycle(4), GammaCertificate(3, mask_of([0, 1, 2])))
    assert not verify_certificate(cycle(4), GammaCertificate(1, bit(0)))


@pytest.mark.parametrize("n", range(1, 31))
def test_path_and_cycle_formula(n):
    assert gamma(path(n)).gamma == -(-n // 3)
    if n >= 3:
        assert gamma(cycle(n)).gamma == -(-n // 3)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=11))
def test_solver_matches_oracle(G):
    cert = gamma(G)
    assert cert.gamma == brute_force_gamma(G).gamma
    assert is_dominating(G, cert.witness) and cert.witness.bit_count() == cert.gamma


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_all_mds_matches_reference(G):
    res = all_mds(G)
    assert list(res.sets) == _all_mds_reference(G)
    g = gamma(G).gamma
    assert all(is_dominating(G, D) and D.bit_count() == g for D in res.sets)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=10), st.data())
def test_deletion_lower_bound(G, data):
    # γ(G−S) ≥ γ(G) − |S| for every proper subset S
    S = data.draw(st.integers(0, G.full - 1)) if G.n > 1 else 0
    rest = G.full & ~S
    if rest:
        assert gamma(G, rest).gamma >= gamma(G).gamma - S.bit_count()


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=10), st.data())
def test_cover_subadditivity(G, data):
    # γ(G) ≤ γ(G[A]) + γ(G[B]) whenever A ∪ B = V(G)
    A = data.draw(st.integers(0, G.full))
    B = (G.full & ~A) | data.draw(st.integers(0, G.full))
    assert gamma(G).gamma <= gamma_value(G, A) + gamma_value(G, B)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=12), st.data())
def test_root_packing_is_sound(G, data):
    within = data.draw(st.integers(1, G.full))
    M = root_packing(G, within)
    sub = [v for v in range(G.n) if within >> v & 1]
    H = Graph.from_edges(G.n, [(u, v) for u, v in G.edges() if within >> u & 1 and within >> v & 1])
    assert M & ~within == 0
    assert two_packings_reference(H, M)
    assert M.bit_count() <= gamma(G, within).gamma
    assert sub  # within is non-empty

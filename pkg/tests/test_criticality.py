import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, two_packings_reference
from stcrit.census import generate_connected
from stcrit.criticality import (
    StCriticalChecker, audit_structure, compatibility, critical_vertices,
    enumerate_st_critical_sets, find_two_colored_gamma_sets, gamma_after_deletion,
    has_two_colored_gamma_set, is_critical_vertex, is_generalized_comb, is_st_critical,
    is_two_packing, is_vertex_critical,
)
from stcrit.domination import all_mds, brute_force_gamma
from stcrit.graph import (
    Graph, GraphError, bit, complete, complete_bipartite, corona, cycle, mask_of, members, path,
)


def _st_reference(G: Graph) -> list[int]:
    """Every proper non-empty st-critical set, by brute-force γ."""
    g = brute_force_gamma(G).gamma
    out = []
    for S in range(1, G.full):
        if brute_force_gamma(G, G.full & ~S).gamma == g - S.bit_count():
            out.append(S)
    return sorted(out, key=lambda S: (S.bit_count(), members(S)))


def test_critical_vertex_examples():
    assert all(is_critical_vertex(cycle(4), v) for v in range(4))
    assert not any(is_critical_vertex(complete(2), v) for v in range(2))
    assert not is_critical_vertex(path(3), 1)
    with pytest.raises(GraphError):
        is_critical_vertex(cycle(4), 9)


def test_vertex_critical_examples():
    assert is_vertex_critical(cycle(4))
    assert is_vertex_critical(cycle(7))
    assert not is_vertex_critical(complete(2))
    assert is_vertex_critical(complete(1))  # by convention K1 is vertex-critical


def test_two_packing_examples():
    assert is_two_packing(cycle(7), mask_of([0, 3]))
    assert not is_two_packing(cycle(4), mask_of([0, 2]))
    assert is_two_packing(cycle(4), bit(1)) and is_two_packing(cycle(4), 0)


def test_st_critical_examples():
    cert = is_st_critical(cycle(4), bit(0))
    assert cert is not None and cert.witness.bit_count() == 1
    assert is_st_critical(cycle(8), mask_of([0, 4])) is None
    assert is_st_critical(cycle(4), mask_of([0, 2])) is None
    with pytest.raises(GraphError):
        is_st_critical(cycle(4), 0)
    with pytest.raises(GraphError):
        is_st_critical(cycle(4), cycle(4).full)


def test_enumerate_examples():
    assert [c.set for c in enumerate_st_critical_sets(cycle(4), 2)] == [1, 2, 4, 8]
    assert enumerate_st_critical_sets(complete(2)) == []
    assert [members(c.set) for c in enumerate_st_critical_sets(cycle(7), 1)] == [[v] for v in range(7)]


def test_compatibility_examples():
    assert compatibility(cycle(4), 0, 2).compatible
    assert not compatibility(complete(2), 0, 1).compatible
    v = compatibility(path(4), 1, 2)
    assert v.compatible and v.witness == mask_of([1, 2])
    with pytest.raises(GraphError):
        compatibility(path(4), 1, 1)


def test_two_colored_examples():
    found = {(t.d1, t.d2) for t in find_two_colored_gamma_sets(cycle(4))}
    assert found == {(bit(0), bit(2)), (bit(1), bit(3))}
    assert find_two_colored_gamma_sets(complete_bipartite(1, 3)) == []
    c6 = find_two_colored_gamma_sets(cycle(6))
    assert all(t.d1 != bit(0) or t.d2 != bit(3) for t in c6)
    assert has_two_colored_gamma_set(cycle(4))


def test_two_colored_against_mds_splits():
    for G in generate_connected(5) + generate_connected(6):
        ref = set()
        for D in all_mds(G).sets:
            vs = members(D)
            for sub in range(1, 1 << len(vs)):
                d1 = mask_of(v for i, v in enumerate(vs) if sub >> i & 1)
                d2 = D & ~d1
                if not d1 & 1 << vs[0] or not d2:
                    continue
                n1 = d1 | _nbhd(G, d1)
                n2 = d2 | _nbhd(G, d2)
                if G.full & ~n1 == d2 and G.full & ~n2 == d1:
                    ref.add((d1, d2))
        assert {(t.d1, t.d2) for t in find_two_colored_gamma_sets(G)} == ref


def _nbhd(G, S):
    out = 0
    for v in members(S):
        out |= G.adj[v]
    return out


def test_generalized_comb_examples():
    assert is_generalized_comb(path(2))
    assert is_generalized_comb(corona(path(3)))
    assert not is_generalized_comb(cycle(4))
    assert is_generalized_comb(path(4))  # the corona of P2
    assert not is_generalized_comb(path(5))


def test_audit_examples():
    for G in (cycle(4), cycle(7)):
        cert = is_st_critical(G, bit(0))
        audit = audit_structure(G, cert)
        assert audit.ok and sum(audit.checked.values()) > 0


def test_gamma_after_deletion_matches_formula():
    assert gamma_after_deletion(cycle(7), bit(0)) == 2
    assert gamma_after_deletion(complete_bipartite(1, 4), bit(0)) == 4


def test_single_deletion_can_jump_by_more_than_one():
    # removing a star's centre leaves isolated leaves, γ goes 1 -> 4
    star = complete_bipartite(1, 4)
    assert gamma_after_deletion(star, bit(0)) - brute_force_gamma(star).gamma == 3


@pytest.mark.parametrize("n", range(1, 7))
def test_enumeration_is_complete(n):
    for G in generate_connected(n):
        got = [c.set for c in enumerate_st_critical_sets(G)]
        assert got == _st_reference(G), G


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9, connected=True))
def test_enumerated_sets_are_packings_with_valid_witnesses(G):
    chk = StCriticalChecker(G)
    for c in enumerate_st_critical_sets(G, checker=chk):
        assert two_packings_reference(G, c.set)
        rest = G.full & ~c.set
        assert c.witness & ~rest == 0
        assert c.witness.bit_count() == chk.gamma - c.set.bit_count()


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9), st.data())
def test_critical_iff_deletion_drops(G, data):
    if G.n < 2:
        return
    v = data.draw(st.integers(0, G.n - 1))
    g = brute_force_gamma(G).gamma
    gv = brute_force_gamma(G, G.full & ~bit(v)).gamma
    assert gv >= g - 1
    assert is_critical_vertex(G, v) == (gv <= g - 1)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=9, connected=True))
def test_pendant_neighbour_not_critical(G):
    crit = set(critical_vertices(G))
    for u in range(G.n):
        if G.degree(u) == 1 and G.n > 2:
            assert members(G.adj[u])[0] not in crit

"""Tests for building the stable hypergraphs and their disjointness queries."""

import json
from itertools import combinations

from stable_kneser import (
    build_stable_kneser,
    class_has_r_disjoint,
    enumerate_hyperedges,
    enumerate_k_subsets,
    hypergraph_from_json,
    hypergraph_to_json,
    is_vec_stable,
    to_graph,
)


def brute_r_disjoint(H, ids, r):
    # oracle: exhaustive scan over all r-combinations of the class
    for combo in combinations(sorted(ids), r):
        masks = [H.vertices[v].mask for v in combo]
        total = 0
        for m in masks:
            if total & m:
                break
            total |= m
        else:
            return combo
    return None


def test_build_vertex_counts():
    assert build_stable_kneser(6, 2, 2, (1, 4)).vertex_count == 9
    assert build_stable_kneser(14, 2, 4, (5, 5)).vertex_count == 35  # 14*5/2


def test_build_small_exact_vertices():
    H = build_stable_kneser(5, 2, 2, (2, 2))
    got = [v.elements for v in H.vertices]
    assert got == [(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)]


def test_build_matches_definition_filter():
    for n, k, svec in [(8, 2, (2, 3)), (9, 3, (2, 2, 2)), (10, 3, (1, 3, 2))]:
        H = build_stable_kneser(n, k, 2, svec)
        want = [
            A.elements
            for A in enumerate_k_subsets(n, k)
            if is_vec_stable(A, n, svec)
        ]
        assert [v.elements for v in H.vertices] == want


def test_vertices_sorted_and_stable():
    H = build_stable_kneser(9, 2, 3, (2, 3))
    elems = [v.elements for v in H.vertices]
    assert elems == sorted(elems)
    assert len(set(elems)) == len(elems)
    for v in H.vertices:
        assert is_vec_stable(v, H.n, H.svec)


def test_to_graph_five_cycle():
    H = build_stable_kneser(5, 2, 2, (2, 2))
    G = to_graph(H)
    assert G.vertex_count == 5
    assert all(G.degree(v) == 2 for v in range(5))
    # connected 2-regular on 5 vertices = the 5-cycle, hence an odd circuit
    assert len(G.edges()) == 5


def test_to_graph_single_vertex_edgeless():
    H = build_stable_kneser(4, 2, 2, (2, 2))
    assert H.vertex_count == 2  # {1,3}, {2,4}
    G = to_graph(H)
    assert len(G.edges()) == 1  # the two pairs are disjoint
    H1 = build_stable_kneser(4, 2, 2, (3, 1))
    assert [v.elements for v in H1.vertices] == [(1, 4)]
    assert to_graph(H1).edges() == []


def test_to_graph_symmetric_irreflexive():
    H = build_stable_kneser(8, 2, 2, (1, 3))
    G = to_graph(H)
    for u in range(G.vertex_count):
        assert not G.has_edge(u, u)
        for v in range(G.vertex_count):
            assert G.has_edge(u, v) == G.has_edge(v, u)


def test_to_graph_requires_r2():
    H = build_stable_kneser(12, 2, 4, (6, 6))
    try:
        to_graph(H)
        assert False, "expected an argument error for r != 2"
    except ValueError:
        pass


def test_class_has_r_disjoint_witness():
    H = build_stable_kneser(12, 2, 4, (6, 6))
    assert [v.elements for v in H.vertices] == [
        (1, 7), (2, 8), (3, 9), (4, 10), (5, 11), (6, 12),
    ]
    witness = class_has_r_disjoint(H, set(range(6)), 4)
    assert witness is not None
    assert [H.vertices[v].elements for v in witness] == [
        (1, 7), (2, 8), (3, 9), (4, 10),
    ]


def test_class_has_r_disjoint_trivial_cases():
    H = build_stable_kneser(12, 2, 4, (6, 6))
    assert class_has_r_disjoint(H, {0, 1}, 4) is None  # fewer than r members
    H2 = build_stable_kneser(7, 2, 4, (1, 1))  # r*k = 8 > 7: pigeonhole
    assert class_has_r_disjoint(H2, set(range(H2.vertex_count)), 4) is None


def test_class_has_r_disjoint_oracle_equality():
    # witness exists iff brute force over all r-combinations finds one
    cases = [
        (build_stable_kneser(9, 2, 3, (1, 2)), 3),
        (build_stable_kneser(8, 2, 2, (2, 3)), 2),
        (build_stable_kneser(12, 3, 4, (1, 1, 1)), 4),
    ]
    for H, r in cases:
        ids = list(range(H.vertex_count))
        # slide a window so classes stay small enough for the oracle
        for lo in range(0, len(ids), 7):
            cls = set(ids[lo : lo + 13])
            got = class_has_r_disjoint(H, cls, r)
            want = brute_r_disjoint(H, cls, r)
            assert (got is None) == (want is None), (H.n, H.svec, r, lo)
            if got is not None:
                assert tuple(sorted(got)) == want  # lexicographically first


def test_enumerate_hyperedges():
    H = build_stable_kneser(12, 2, 4, (6, 6))
    first = next(iter(enumerate_hyperedges(H, limit=1)))
    assert [H.vertices[v].elements for v in first] == [
        (1, 7), (2, 8), (3, 9), (4, 10),
    ]
    H2 = build_stable_kneser(7, 2, 4, (1, 1))
    assert list(enumerate_hyperedges(H2, limit=10)) == []
    cycle = build_stable_kneser(5, 2, 2, (2, 2))
    assert len(list(enumerate_hyperedges(cycle, limit=100))) == 5


def test_vertex_monotone_in_svec():
    # raising any gap entry can only remove vertices
    base = build_stable_kneser(10, 2, 2, (1, 2))
    tighter = build_stable_kneser(10, 2, 2, (2, 3))
    vs = {v.elements for v in base.vertices}
    assert {v.elements for v in tighter.vertices} <= vs


def test_json_round_trip():
    H = build_stable_kneser(6, 2, 2, (1, 4))
    blob = json.dumps(hypergraph_to_json(H))
    H2 = hypergraph_from_json(json.loads(blob))
    assert H2.n == H.n and H2.k == H.k and H2.r == H.r
    assert tuple(H2.svec) == tuple(H.svec)
    assert [v.elements for v in H2.vertices] == [v.elements for v in H.vertices]


if __name__ == "__main__":
    import pytest

    pytest.main([__file__, "-v"])

"""Tests for the window graph, the edge bijection, and ST-partitions."""

import json
from itertools import combinations

from stable_kneser import (
    Graph,
    STAR,
    STPart,
    STPartition,
    TRIANGLE,
    build_stable_kneser,
    build_w_graph,
    check_st_properties,
    chromatic_number,
    coloring_to_st_partition,
    independence_number,
    is_butterfly_free,
    kneser_edge_bijection,
    st_partition_from_json,
    st_partition_to_coloring,
    st_partition_to_json,
    validate_coloring,
    w_edges,
)


def graph_from_edges(n, edges):
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(vertex_count=n, adjacency=tuple(adj))


def min_st_parts(G):
    # exhaustive minimum part count.  The first uncovered edge (u, v) lies
    # in a star at u, a star at v, or a triangle; a star may always be
    # grown to take every uncovered edge at its center, because removing
    # edges from any other part leaves a star or a smaller triangle-piece
    # (two edges of a triangle share a vertex).  So branching on the two
    # maximal stars plus each triangle through the edge is exact.
    n = G.vertex_count
    memo = {}

    def rec(uncovered):
        if not uncovered:
            return 0
        if uncovered in memo:
            return memo[uncovered]
        u, v = min(uncovered)
        best = len(uncovered)  # one singleton star per edge always works
        for center in (u, v):
            star = frozenset(e for e in uncovered if center in e)
            best = min(best, 1 + rec(uncovered - star))
        for w in range(1, n + 1):
            if w in (u, v):
                continue
            f = (min(u, w), max(u, w))
            g = (min(v, w), max(v, w))
            if f in uncovered and g in uncovered:
                best = min(best, 1 + rec(uncovered - {(u, v), f, g}))
        memo[uncovered] = best
        return best

    return rec(frozenset(w_edges(G)))


def test_build_w_graph_examples():
    G = build_w_graph(6, 1, 4)
    assert w_edges(G) == [
        (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (4, 6), (5, 6),
    ]
    K5 = build_w_graph(5, 1, 1)
    assert all(K5.degree(v) == 4 for v in range(5))
    G = build_w_graph(10, 2, 4)
    # ground element 1 is vertex 0; its window is distances 2..6
    neighbours = [v + 1 for v in range(10) if G.has_edge(0, v)]
    assert neighbours == [3, 4, 5, 6, 7]


def test_edge_count_matches_vertex_count():
    for n, s1, s2 in [(6, 1, 4), (10, 2, 4), (9, 2, 2), (12, 3, 6)]:
        H = build_stable_kneser(n, 2, 2, (s1, s2))
        G = build_w_graph(n, s1, s2)
        assert len(w_edges(G)) == H.vertex_count, (n, s1, s2)


def test_kneser_edge_bijection():
    bij = kneser_edge_bijection(6, 1, 4)
    assert len(bij.vertex_to_edge) == 9
    H = build_stable_kneser(6, 2, 2, (1, 4))
    for vid, v in enumerate(H.vertices):
        assert bij.vertex_to_edge[vid] == v.elements
        assert bij.edge_to_vertex[v.elements] == vid
    bij10 = kneser_edge_bijection(10, 2, 4)
    assert len(bij10.vertex_to_edge) == build_stable_kneser(10, 2, 2, (2, 4)).vertex_count


def test_bijection_swaps_disjointness_for_endpoint_sharing():
    n, s1, s2 = 8, 2, 3
    H = build_stable_kneser(n, 2, 2, (s1, s2))
    for a, b in combinations(range(H.vertex_count), 2):
        A, B = H.vertices[a], H.vertices[b]
        disjoint = not (A.mask & B.mask)
        share_endpoint = bool(set(A.elements) & set(B.elements))
        assert disjoint == (not share_endpoint)


def test_partition_of_quoted_three_classes():
    H = build_stable_kneser(6, 2, 2, (1, 4))
    res = chromatic_number(H)
    assert res.chi == 3
    P = coloring_to_st_partition(H, res.certificate)
    kinds = sorted((p.kind, p.center) for p in P.parts)
    assert kinds == [(STAR, 4), (STAR, 5), (TRIANGLE, None)]
    triangle = next(p for p in P.parts if p.kind == TRIANGLE)
    assert sorted(triangle.edges) == [(1, 2), (1, 3), (2, 3)]


def test_partition_round_trip():
    for n, svec in [(6, (1, 4)), (8, (2, 2)), (9, (2, 3))]:
        H = build_stable_kneser(n, 2, 2, svec)
        res = chromatic_number(H)
        P = coloring_to_st_partition(H, res.certificate)
        c2 = st_partition_to_coloring(H, P)
        assert validate_coloring(H, c2).proper
        assert c2.palette_size == len(P.parts) == res.chi
        P2 = coloring_to_st_partition(H, c2)
        assert sorted(sorted(p.edges) for p in P2.parts) == sorted(
            sorted(p.edges) for p in P.parts
        )


def test_single_edge_parts_center_on_lower_endpoint():
    # a one-edge class is a star whose designated center is the lower endpoint
    H = build_stable_kneser(6, 2, 2, (1, 4))
    colors = tuple(range(1, H.vertex_count + 1))  # every vertex its own color
    from stable_kneser import Coloring

    P = coloring_to_st_partition(
        H, Coloring(assignment=colors, palette_size=len(colors), scheme="test")
    )
    for part in P.parts:
        assert part.kind == STAR
        (edge,) = part.edges
        assert part.center == edge[0]


def test_complete_graph_star_partition():
    # K4 is not a single star, but three stars work and round-trip
    H = build_stable_kneser(4, 2, 2, (1, 1))  # all six pairs
    G = build_w_graph(4, 1, 1)
    P = STPartition(
        parts=(
            STPart(kind=STAR, edges=((1, 2), (1, 3), (1, 4)), center=1),
            STPart(kind=STAR, edges=((2, 3), (2, 4)), center=2),
            STPart(kind=STAR, edges=((3, 4),), center=3),
        )
    )
    c = st_partition_to_coloring(H, P)
    assert validate_coloring(H, c).proper
    assert c.palette_size == 3
    # three stars are valid but not optimal: triangle {1,2,3} plus the
    # star at 4 does it in two, matching chi of the pair graph
    assert min_st_parts(G) == 2
    assert chromatic_number(H).chi == 2


def test_st_partition_rejects_invalid():
    H = build_stable_kneser(6, 2, 2, (1, 4))
    incomplete = STPartition(
        parts=(STPart(kind=STAR, edges=((1, 2), (1, 3)), center=1),)
    )
    try:
        st_partition_to_coloring(H, incomplete)
        assert False, "expected rejection: parts do not cover every edge"
    except ValueError:
        pass
    bad_center = STPartition(
        parts=(STPart(kind=STAR, edges=((1, 2), (1, 3)), center=2),)
    )
    try:
        st_partition_to_coloring(H, bad_center)
        assert False, "expected rejection: center not on every edge"
    except ValueError:
        pass


def test_min_part_count_equals_chromatic_number():
    # exhaustive over all ST-partitions on the small instances
    for n, svec in [(5, (2, 2)), (6, (1, 4)), (6, (2, 2)), (7, (1, 4)), (8, (2, 4)), (7, (2, 3))]:
        H = build_stable_kneser(n, 2, 2, svec)
        G = build_w_graph(n, svec[0], svec[1])
        assert min_st_parts(G) == chromatic_number(H).chi, (n, svec)


def test_butterfly_detector_controls():
    # two triangles glued at one vertex, nothing else
    butterfly = graph_from_edges(
        5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]
    )
    witness = is_butterfly_free(butterfly)
    assert witness is not None
    assert sorted(witness) == [0, 1, 2, 3, 4]
    # K5 contains no INDUCED butterfly: extra edges are always present
    assert is_butterfly_free(build_w_graph(5, 1, 1)) is None
    assert is_butterfly_free(build_w_graph(10, 2, 4)) is None


def test_window_graphs_with_induced_butterflies_exist():
    # {1,2,4} and {4,6,7} are triangles of W(7,1,4) glued at 4, with no
    # other edges among those five vertices: windows are distances 1..3
    G = build_w_graph(7, 1, 4)
    for u, v in [(1, 2), (1, 4), (2, 4), (4, 6), (4, 7), (6, 7)]:
        assert G.has_edge(u - 1, v - 1)
    for u, v in [(1, 6), (1, 7), (2, 6), (2, 7)]:
        assert not G.has_edge(u - 1, v - 1)
    witness = is_butterfly_free(G)
    assert witness is not None
    assert [v + 1 for v in witness] == [1, 2, 4, 6, 7]
    # the same configuration scales to wider windows
    assert is_butterfly_free(build_w_graph(11, 2, 6)) is not None


def test_independence_matches_twice_first_gap():
    # alpha(W(n, s1, s2)) == 2*s1 whenever s2 >= 2*s1 and n >= 2*s2 - 2,
    # including on window graphs that do contain induced butterflies
    for s1, s2, n in [
        (1, 2, 4), (1, 4, 7), (2, 4, 10), (2, 4, 12), (2, 5, 9),
        (2, 6, 11), (3, 6, 12), (3, 7, 13),
    ]:
        assert 2 * s1 <= s2 and n >= 2 * s2 - 2
        res = independence_number(build_w_graph(n, s1, s2))
        assert res.alpha == 2 * s1, (n, s1, s2)


def test_check_st_properties_quoted_partition():
    H = build_stable_kneser(6, 2, 2, (1, 4))
    G = build_w_graph(6, 1, 4)
    P = coloring_to_st_partition(H, chromatic_number(H).certificate)
    report = check_st_properties(P, G)
    assert report.ok
    assert report.center_on_triangle == ()
    assert report.long_circuits == ()


def test_check_st_properties_center_on_triangle():
    # triangle {1,2,3} plus a star centered at 3: property (1) fails
    G = graph_from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    P = STPartition(
        parts=(
            STPart(kind=TRIANGLE, edges=((1, 2), (1, 3), (2, 3))),
            STPart(kind=STAR, edges=((3, 4),), center=3),
        )
    )
    report = check_st_properties(P, G)
    assert not report.ok
    assert any(row[0] == 3 for row in report.center_on_triangle)
    assert report.long_circuits == ()


def test_check_st_properties_long_circuit():
    # four triangles pairwise glued along a 4-circuit 1-2-3-4; every
    # circuit edge lies in some triangle part, and the 4-circuit itself
    # is not a triangle: property (2) fails
    edges = [
        (1, 2), (2, 3), (3, 4), (1, 4),
        (1, 5), (2, 5), (2, 6), (3, 6), (3, 7), (4, 7), (1, 8), (4, 8),
    ]
    G = graph_from_edges(8, [(u - 1, v - 1) for u, v in edges])
    P = STPartition(
        parts=(
            STPart(kind=TRIANGLE, edges=((1, 2), (1, 5), (2, 5))),
            STPart(kind=TRIANGLE, edges=((2, 3), (2, 6), (3, 6))),
            STPart(kind=TRIANGLE, edges=((3, 4), (3, 7), (4, 7))),
            STPart(kind=TRIANGLE, edges=((1, 4), (1, 8), (4, 8))),
        )
    )
    report = check_st_properties(P, G)
    assert not report.ok
    assert report.center_on_triangle == ()
    assert len(report.long_circuits) >= 1
    assert any(len(circ) >= 4 for circ in report.long_circuits)


def test_st_partition_json_round_trip():
    H = build_stable_kneser(6, 2, 2, (1, 4))
    P = coloring_to_st_partition(H, chromatic_number(H).certificate)
    text = st_partition_to_json(P)
    P2 = st_partition_from_json(text)
    assert P2 == P
    blob = json.loads(text)
    assert set(blob) == {"parts"}
    for part in blob["parts"]:
        assert part["kind"] in (STAR, TRIANGLE)
        assert ("center" in part) == (part["kind"] == STAR)


if __name__ == "__main__":
    import pytest

    pytest.main([__file__, "-v"])

"""Tests for the exact chromatic, independence, and packing solvers."""

from itertools import combinations, product

from stable_kneser import (
    INDETERMINATE,
    NEG_INFINITY,
    build_stable_kneser,
    build_w_graph,
    block_coloring,
    chromatic_number,
    independence_number,
    is_t_colorable,
    max_disjoint_packing,
    to_graph,
    validate_coloring,
)


def brute_max_independent(G):
    # oracle: scan all subsets of a <= 20 vertex graph
    n = G.vertex_count
    best = 0
    for mask in range(1 << n):
        picked = [v for v in range(n) if mask >> v & 1]
        if len(picked) <= best:
            continue
        if all(not G.has_edge(u, v) for u, v in combinations(picked, 2)):
            best = len(picked)
    return best


def brute_two_colorable(H):
    # oracle: try all 2^V sign patterns
    G = to_graph(H)
    n = G.vertex_count
    for mask in range(1 << n):
        ok = True
        for u, v in G.edges():
            if (mask >> u & 1) == (mask >> v & 1):
                ok = False
                break
        if ok:
            return True
    return False


def test_decision_on_five_cycle():
    H = build_stable_kneser(5, 2, 2, (2, 2))
    assert not brute_two_colorable(H)  # odd cycle
    assert is_t_colorable(H, 2) is None
    c = is_t_colorable(H, 3)
    assert c is not None and c is not INDETERMINATE
    assert validate_coloring(H, c).proper


def test_decision_on_four_uniform_instance():
    H = build_stable_kneser(12, 2, 4, (6, 6))
    assert is_t_colorable(H, 1) is None  # a hyperedge exists
    c = is_t_colorable(H, 2)
    assert c is not None and c is not INDETERMINATE
    assert validate_coloring(H, c).proper


def test_chromatic_number_examples():
    res = chromatic_number(build_stable_kneser(6, 2, 2, (1, 4)))
    assert res.chi == 3
    res = chromatic_number(build_stable_kneser(13, 2, 4, (5, 5)))
    assert res.chi == 3  # ceil((13-5)/3)


def test_chromatic_number_null_graph():
    res = chromatic_number(build_stable_kneser(4, 2, 2, (2, 4)))
    assert res.chi == NEG_INFINITY
    assert res.certificate is None


def test_chromatic_number_edgeless_nonempty():
    res = chromatic_number(build_stable_kneser(4, 2, 2, (3, 1)))
    assert res.chi == 1


def test_certificate_invariants():
    for n, k, r, svec in [
        (6, 2, 2, (1, 4)),
        (8, 2, 2, (2, 2)),
        (9, 2, 3, (2, 2)),
        (12, 2, 4, (6, 6)),
    ]:
        H = build_stable_kneser(n, k, r, svec)
        res = chromatic_number(H)
        v = validate_coloring(H, res.certificate)
        assert v.proper
        assert res.certificate.palette_size == res.chi
        assert is_t_colorable(H, res.chi - 1) is None, (n, k, r, svec)


def test_chromatic_monotone_under_vertex_removal():
    # widening the gaps removes vertices, which can only lower chi
    for n in (12, 13):
        tight = chromatic_number(build_stable_kneser(n, 2, 4, (6, 6))).chi
        loose = chromatic_number(build_stable_kneser(n, 2, 4, (5, 5))).chi
        assert tight <= loose, n


def test_budget_exhaustion_is_reported():
    H = build_stable_kneser(12, 2, 2, (2, 2))
    assert is_t_colorable(H, 8, budget=3) is INDETERMINATE
    res = chromatic_number(H, budget=5)
    assert res.status == "indeterminate"
    assert res.chi is None
    lo, hi = res.bounds
    assert lo <= hi
    full = chromatic_number(H)
    assert full.status == "exact"
    assert lo <= full.chi <= hi


def test_independence_examples():
    assert independence_number(build_w_graph(10, 2, 4)).alpha == 4
    # window [4, 3] is empty, so the graph on 7 vertices has no edges
    assert independence_number(build_w_graph(7, 4, 4)).alpha == 7
    # window [2, 3] on 5 vertices is a 5-cycle
    assert independence_number(build_w_graph(5, 2, 2)).alpha == 2


def test_independence_witness_and_oracle():
    cases = [
        build_w_graph(10, 2, 4),
        build_w_graph(7, 1, 4),
        build_w_graph(12, 2, 5),
        build_w_graph(8, 3, 3),
        to_graph(build_stable_kneser(7, 2, 2, (1, 2))),
    ]
    for G in cases:
        res = independence_number(G)
        assert res.alpha == brute_max_independent(G)
        assert len(set(res.witness)) == res.alpha
        for u, v in combinations(res.witness, 2):
            assert not G.has_edge(u, v)


def test_independence_accepts_pair_hypergraphs():
    H = build_stable_kneser(6, 2, 2, (1, 4))
    res = independence_number(H)
    assert res.alpha == brute_max_independent(to_graph(H))


def test_packing_examples():
    H = build_stable_kneser(6, 2, 2, (1, 4))
    res = max_disjoint_packing(H)
    assert res.size == 3
    assert sorted(H.vertices[v].elements for v in res.witness) == [
        (1, 2), (3, 4), (5, 6),
    ]

    res = max_disjoint_packing(build_stable_kneser(12, 2, 4, (6, 6)))
    assert res.size == 6

    res = max_disjoint_packing(build_stable_kneser(4, 2, 2, (3, 1)))
    assert res.size == 1


def test_packing_bounds_chromatic_for_graphs():
    # r = 2: pairwise disjoint vertices form a clique, so size <= chi
    for n, svec in product(range(5, 10), [(1, 2), (2, 2), (1, 3)]):
        H = build_stable_kneser(n, 2, 2, svec)
        if H.vertex_count == 0:
            continue
        pack = max_disjoint_packing(H)
        res = chromatic_number(H)
        assert pack.size <= res.chi <= block_coloring(H).palette_size, (n, svec)
        assert pack.chi_lower_bound <= res.chi


if __name__ == "__main__":
    import pytest

    pytest.main([__file__, "-v"])

"""Tests for k-subset enumeration and the stability predicates."""

import math
from itertools import combinations

from stable_kneser import (
    CapacityError,
    KSubset,
    are_pairwise_disjoint,
    enumerate_k_subsets,
    is_s_stable,
    is_vec_stable,
)


def subset(elems, n):
    return KSubset.from_elements(tuple(elems), n)


def brute_s_stable(elems, n, s):
    # definition-level oracle: s <= |i - j| <= n - s for every distinct pair
    return all(s <= abs(i - j) <= n - s for i, j in combinations(elems, 2))


def brute_vec_stable(elems, n, svec):
    # definition-level oracle: gap conditions plus the wraparound condition
    a = sorted(elems)
    k = len(a)
    if k == 0:
        return True
    for j in range(k - 1):
        if a[j + 1] - a[j] < svec[j]:
            return False
    return a[-1] - a[0] <= n - svec[-1]


def test_enumerate_3_2_exact():
    got = [A.elements for A in enumerate_k_subsets(3, 2)]
    assert got == [(1, 2), (1, 3), (2, 3)]


def test_enumerate_counts():
    assert len(list(enumerate_k_subsets(5, 2))) == 10
    assert len(list(enumerate_k_subsets(14, 2))) == 91
    assert len(list(enumerate_k_subsets(14, 2))) == math.comb(14, 2)
    assert len(list(enumerate_k_subsets(12, 4))) == math.comb(12, 4)


def test_enumerate_lexicographic_and_duplicate_free():
    for n, k in [(6, 2), (7, 3), (9, 4)]:
        elems = [A.elements for A in enumerate_k_subsets(n, k)]
        assert elems == sorted(elems)
        assert len(elems) == len(set(elems)) == math.comb(n, k)


def test_enumerate_degenerate_sizes():
    assert [A.elements for A in enumerate_k_subsets(4, 0)] == [()]
    assert [A.elements for A in enumerate_k_subsets(4, 4)] == [(1, 2, 3, 4)]
    assert list(enumerate_k_subsets(2, 3)) == []


def test_enumerate_errors():
    try:
        list(enumerate_k_subsets(65, 2))
        assert False, "expected a capacity error for n > 64"
    except CapacityError:
        pass
    try:
        list(enumerate_k_subsets(5, -1))
        assert False, "expected an argument error for k < 0"
    except ValueError:
        pass


def test_mask_encoding():
    for A in enumerate_k_subsets(10, 3):
        assert bin(A.mask).count("1") == len(A.elements)
        for i in A.elements:
            assert A.mask >> (i - 1) & 1
        assert A.ambient_n == 10


def test_is_s_stable_examples():
    # {1,3,5} in [6]: pairwise distances 2, 2, 4 all lie in [2, 6-2]
    assert is_s_stable(subset((1, 3, 5), 6), 6, 2) is True
    # {1,6} in [6]: |1-6| = 5 > 6-2 (circularly, 1 and 6 are adjacent)
    assert is_s_stable(subset((1, 6), 6), 6, 2) is False
    assert is_s_stable(subset((1, 3), 5), 5, 2) is True
    assert is_s_stable(subset((4,), 9), 9, 3) is True  # singleton: no pair
    assert is_s_stable(subset((), 9), 9, 3) is True


def test_is_s_stable_matches_definition_filter():
    # oracle equality over the full grid n <= 12, k <= 4, s <= 4
    for n in range(2, 13):
        for k in range(1, 5):
            for s in range(1, 5):
                got = sum(
                    1 for A in enumerate_k_subsets(n, k) if is_s_stable(A, n, s)
                )
                want = sum(
                    1
                    for A in enumerate_k_subsets(n, k)
                    if brute_s_stable(A.elements, n, s)
                )
                assert got == want, (n, k, s)


def test_pair_count_identity():
    # number of s-stable pairs is n*(n-2s+1)/2 whenever n >= 2s
    for n in range(2, 21):
        for s in range(1, 7):
            if n < 2 * s:
                continue
            count = sum(
                1 for A in enumerate_k_subsets(n, 2) if is_s_stable(A, n, s)
            )
            assert count == n * (n - 2 * s + 1) // 2, (n, s)


def test_is_vec_stable_examples():
    assert is_vec_stable(subset((1, 3), 6), 6, (1, 4)) is True
    assert is_vec_stable(subset((1, 6), 6), 6, (1, 4)) is False  # 5 > 6-4
    try:
        is_vec_stable(subset((1, 2), 5), 5, (1, 1, 1))
        assert False, "expected an argument error on size mismatch"
    except ValueError:
        pass


def test_is_vec_stable_k1_wraparound_only():
    A = subset((1,), 3)
    assert is_vec_stable(A, 3, (3,)) is True  # 0 <= 3-3
    assert is_vec_stable(A, 3, (4,)) is False  # 0 > 3-4


def test_constant_vector_recovers_uniform_stability():
    # exhaustive agreement on every subset for n <= 10, k <= 3, s <= 3;
    # for k = 1 the vector definition is wraparound-only, so it diverges
    # from the (vacuously true) uniform predicate when n < s — skip there
    for n in range(2, 11):
        for k in range(1, 4):
            for s in range(1, 4):
                if k == 1 and n < s:
                    continue
                svec = (s,) * k
                for A in enumerate_k_subsets(n, k):
                    assert is_vec_stable(A, n, svec) == is_s_stable(A, n, s), (
                        n,
                        s,
                        A.elements,
                    )


def test_vec_stable_matches_definition_filter():
    # oracle equality against the gap/wraparound definition on mixed vectors
    grid = [(6, (1, 4)), (8, (2, 3)), (9, (3, 1)), (10, (2, 2, 4)), (11, (1, 3, 2))]
    for n, svec in grid:
        k = len(svec)
        for A in enumerate_k_subsets(n, k):
            assert is_vec_stable(A, n, svec) == brute_vec_stable(
                A.elements, n, svec
            ), (n, svec, A.elements)


def test_are_pairwise_disjoint():
    n = 6
    trio = [subset((1, 2), n), subset((3, 4), n), subset((5, 6), n)]
    assert are_pairwise_disjoint(trio) is True
    assert are_pairwise_disjoint([subset((1, 2), n), subset((2, 3), n)]) is False
    assert are_pairwise_disjoint([]) is True


if __name__ == "__main__":
    import pytest

    pytest.main([__file__, "-v"])

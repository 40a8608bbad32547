"""Definition-level brute-force oracles.

Everything in this file is deliberately naive: straight transcriptions of the
definitions, with no bitmask tricks and no pruning, so that the fast
implementations in the package can be checked against something that is
obviously correct.  Nothing here imports from ``stable_kneser``.
"""

import itertools
from math import comb


# ---------------------------------------------------------------------------
# subsets / stability


def brute_k_subsets(n, k):
    """All k-subsets of [n] as sorted tuples, lexicographic order."""
    return list(itertools.combinations(range(1, n + 1), k))


def brute_is_s_stable(elems, n, s):
    """s <= |i-j| <= n-s for all distinct pairs, by literal pairwise scan."""
    for i, j in itertools.combinations(elems, 2):
        d = abs(i - j)
        if not (s <= d <= n - s):
            return False
    return True


def brute_is_vec_stable(elems, n, svec):
    """Gap conditions on the sorted elements plus the wraparound condition."""
    k = len(svec)
    a = sorted(elems)
    assert len(a) == k
    for j in range(k - 1):
        if a[j + 1] - a[j] < svec[j]:
            return False
    return a[-1] - a[0] <= n - svec[-1]


def brute_stable_vertices(n, k, svec):
    return [A for A in brute_k_subsets(n, k) if brute_is_vec_stable(A, n, svec)]


def count_k2_s_stable(n, s):
    """Closed form n*(n-2s+1)/2 for the number of s-stable pairs, n >= 2s."""
    return n * (n - 2 * s + 1) // 2


def binomial(n, k):
    return comb(n, k)


# ---------------------------------------------------------------------------
# hypergraph / packing


def pairwise_disjoint(sets):
    for x, y in itertools.combinations(sets, 2):
        if set(x) & set(y):
            return False
    return True


def brute_r_disjoint_witness(vertices, ids, r):
    """First r-subset (in lexicographic id order) of `ids` that is pairwise
    disjoint, or None.  vertices: list of element-tuples indexed by id."""
    for combo in itertools.combinations(sorted(ids), r):
        if pairwise_disjoint([vertices[i] for i in combo]):
            return combo
    return None


def brute_max_packing(vertices):
    """Maximum number of pairwise disjoint vertices, by exhaustive search."""
    best = 0
    n = len(vertices)

    def grow(start, chosen):
        nonlocal best
        best = max(best, len(chosen))
        for i in range(start, n):
            if all(not (set(vertices[i]) & set(vertices[j])) for j in chosen):
                grow(i + 1, chosen + [i])

    grow(0, [])
    return best


# ---------------------------------------------------------------------------
# coloring / chromatic number (tiny instances only)


def brute_is_proper_graph(vertices, coloring):
    """No two disjoint vertices share a color (r=2 hyperedges)."""
    n = len(vertices)
    for i in range(n):
        for j in range(i + 1, n):
            if coloring[i] == coloring[j] and not (set(vertices[i]) & set(vertices[j])):
                return False
    return True


def brute_is_proper_hyper(vertices, coloring, r):
    """No color class contains r pairwise disjoint vertices."""
    classes = {}
    for i, c in enumerate(coloring):
        classes.setdefault(c, []).append(i)
    for ids in classes.values():
        if brute_r_disjoint_witness(vertices, ids, r) is not None:
            return False
    return True


def brute_chromatic_graph(vertices, t_max=None):
    """Exact chromatic number of the disjointness graph by trying all
    assignments; only usable for a handful of vertices."""
    n = len(vertices)
    if n == 0:
        return float("-inf")
    hi = t_max if t_max is not None else n
    for t in range(1, hi + 1):
        for coloring in itertools.product(range(t), repeat=n):
            if brute_is_proper_graph(vertices, coloring):
                return t
    return None


def brute_chromatic_hyper(vertices, r, t_max=None):
    n = len(vertices)
    if n == 0:
        return float("-inf")
    hi = t_max if t_max is not None else n
    for t in range(1, hi + 1):
        for coloring in itertools.product(range(t), repeat=n):
            if brute_is_proper_hyper(vertices, coloring, r):
                return t
    return None


def brute_independence_number(adj_sets):
    """Exact max independent set size; adj_sets[v] = set of neighbours."""
    n = len(adj_sets)
    best = 0
    for size in range(n, 0, -1):
        for combo in itertools.combinations(range(n), size):
            cs = set(combo)
            if all(not (adj_sets[v] & cs) for v in combo):
                return size
    return best


# ---------------------------------------------------------------------------
# alternating subsets of signed vectors


def brute_alt_best(signs):
    """(max length, lexicographically smallest chosen index set) over all
    sign-alternating subsets of the support.  signs: tuple in {-1,0,+1}^n,
    1-based positions returned."""
    support = [i + 1 for i, s in enumerate(signs) if s != 0]
    best_len = 0
    best_set = ()
    for size in range(1, len(support) + 1):
        for combo in itertools.combinations(support, size):
            ok = all(
                signs[combo[i] - 1] * signs[combo[i + 1] - 1] == -1
                for i in range(len(combo) - 1)
            )
            if ok and (size > best_len or (size == best_len and combo < best_set)):
                best_len = size
                best_set = combo
    return best_len, best_set


def all_signed_vectors(n, nonzero=True):
    for signs in itertools.product((-1, 0, 1), repeat=n):
        if nonzero and all(s == 0 for s in signs):
            continue
        yield signs


# ---------------------------------------------------------------------------
# ST-partitions (tiny graphs)


def edges_of_adj(adj_sets):
    return sorted(
        (u, v) for u in range(len(adj_sets)) for v in adj_sets[u] if u < v
    )


def brute_min_st_partition(n_vertices, edges):
    """Minimum number of parts over all partitions of `edges` into stars and
    triangles.  Pure recursion over the first uncovered edge; exponential,
    fine for |E| <= ~12."""
    edges = [tuple(sorted(e)) for e in edges]
    eset = sorted(set(edges))

    def is_star(part):
        common = set(part[0])
        for e in part[1:]:
            common &= set(e)
        return bool(common)

    def is_triangle(part):
        if len(part) != 3:
            return False
        vs = set()
        for e in part:
            vs |= set(e)
        return len(vs) == 3

    best = [len(eset) + 1]

    def rec(remaining, parts):
        if parts >= best[0]:
            return
        if not remaining:
            best[0] = parts
            return
        first = remaining[0]
        rest = remaining[1:]
        # all subsets of `rest` that together with `first` form a star or triangle
        for size in range(len(rest), -1, -1):
            for extra in itertools.combinations(rest, size):
                part = [first] + list(extra)
                if is_star(part) or is_triangle(part):
                    left = [e for e in rest if e not in extra]
                    rec(left, parts + 1)

    rec(eset, 0)
    return best[0]

"""Stable Kneser hypergraphs: vertex lists plus an implicit hyperedge test.

A hypergraph here is the data (n, k, r, svec) together with the list of all
svec-stable k-subsets of [n], sorted lexicographically; vertex ids are list
indices.  Hyperedges (r pairwise disjoint vertices) are never materialized:
the solver only ever asks whether a given color class contains r pairwise
disjoint members, which is answered by a depth-first packing search over
bitmasks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .subsets import KSubset, enumerate_k_subsets, is_vec_stable, validate_svec


@dataclass(frozen=True)
class Hypergraph:
    n: int
    k: int
    r: int
    svec: tuple
    vertices: tuple  # of KSubset, index == vertex id
    masks: tuple = field(repr=False)  # masks[i] == vertices[i].mask

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Graph:
    """Adjacency as bitset rows (arbitrary-width Python ints)."""

    vertex_count: int
    adjacency: tuple  # adjacency[v] = int bitmask of neighbours

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return self.adjacency[u] >> v & 1 == 1

    def edges(self):
        return [
            (u, v)
            for u in range(self.vertex_count)
            for v in range(u + 1, self.vertex_count)
            if self.adjacency[u] >> v & 1
        ]


def build_stable_kneser(n: int, k: int, r: int, svec: Sequence[int]) -> Hypergraph:
    """All svec-stable k-subsets of [n] as vertices; hyperedges implicit."""
    s = validate_svec(svec)
    if len(s) != k:
        raise ValueError(f"stability vector length {len(s)} != k={k}")
    if r < 2:
        raise ValueError(f"uniformity r must be >= 2, got {r}")
    if k < 1:
        raise ValueError(f"subset size k must be >= 1, got {k}")
    verts = tuple(
        A for A in enumerate_k_subsets(n, k) if is_vec_stable(A, n, s)
    )
    return Hypergraph(
        n=n, k=k, r=r, svec=s,
        vertices=verts, masks=tuple(A.mask for A in verts),
    )


def to_graph(H: Hypergraph) -> Graph:
    """r=2 specialization: vertices adjacent iff disjoint as sets."""
    if H.r != 2:
        raise ValueError(f"to_graph needs r == 2, got r={H.r}")
    V = H.vertex_count
    masks = H.masks
    rows = []
    for i in range(V):
        row = 0
        mi = masks[i]
        for j in range(V):
            if j != i and mi & masks[j] == 0:
                row |= 1 << j
        rows.append(row)
    return Graph(vertex_count=V, adjacency=tuple(rows))


def class_has_r_disjoint(
    H: Hypergraph, vertex_ids, r: Optional[int] = None
) -> Optional[tuple]:
    """Return r pairwise-disjoint vertices from the class, else None.

    Deterministic: candidates are explored in ascending id order, so the
    lexicographically first witness (as an id tuple) is returned.
    """
    r = H.r if r is None else r
    ids = sorted(vertex_ids)
    if r < 1 or len(ids) < r:
        return None
    if r * H.k > H.n:
        return None  # pigeonhole: not enough ground elements
    masks = H.masks
    chosen = []

    def dfs(start: int, used: int) -> bool:
        if len(chosen) == r:
            return True
        # prune: not enough ground elements left for the remaining sets
        if H.n - used.bit_count() < H.k * (r - len(chosen)):
            return False
        for pos in range(start, len(ids)):
            # prune: not enough candidates left to finish
            if len(ids) - pos < r - len(chosen):
                return False
            v = ids[pos]
            if masks[v] & used == 0:
                chosen.append(v)
                if dfs(pos + 1, used | masks[v]):
                    return True
                chosen.pop()
        return False

    if dfs(0, 0):
        return tuple(chosen)
    return None


def enumerate_hyperedges(H: Hypergraph, limit: Optional[int] = None) -> Iterator[tuple]:
    """Yield pairwise-disjoint r-tuples of vertex ids in ascending
    lexicographic order, stopping after `limit` if given.  Diagnostics only:
    the count explodes combinatorially."""
    if limit is not None and limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    masks = H.masks
    V = H.vertex_count
    r = H.r
    emitted = 0
    stack = []

    def dfs(start: int, used: int):
        nonlocal emitted
        if limit is not None and emitted >= limit:
            return
        if len(stack) == r:
            yield tuple(stack)
            emitted += 1
            return
        if H.n - used.bit_count() < H.k * (r - len(stack)):
            return
        for v in range(start, V):
            if masks[v] & used == 0:
                stack.append(v)
                yield from dfs(v + 1, used | masks[v])
                stack.pop()
                if limit is not None and emitted >= limit:
                    return

    yield from dfs(0, 0)


# ---------------------------------------------------------------------------
# serialization


def hypergraph_to_json(H: Hypergraph) -> str:
    return json.dumps(
        {
            "n": H.n,
            "k": H.k,
            "r": H.r,
            "svec": list(H.svec),
            "vertices": [list(A.elements) for A in H.vertices],
        }
    )


def hypergraph_from_json(text: str) -> Hypergraph:
    obj = json.loads(text)
    H = build_stable_kneser(obj["n"], obj["k"], obj["r"], tuple(obj["svec"]))
    stored = [tuple(v) for v in obj["vertices"]]
    if stored != [A.elements for A in H.vertices]:
        raise ValueError("vertex list does not match its parameters")
    return H

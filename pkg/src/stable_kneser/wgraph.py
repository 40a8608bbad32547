"""The window graph W(n, s1, s2) and its star/triangle edge partitions.

W(n, s1, s2) has vertex set [n] with i < j adjacent iff s1 <= j - i <= n - s2,
which is exactly the condition for {i, j} to be an (s1, s2)-stable pair.  The
2-subsets therefore biject with W's edges, and two stable pairs are disjoint
precisely when the corresponding edges share no endpoint: the stable Kneser
graph KG^2(n,2)_(s1,s2) is the complement of the line graph of W.

Under that correspondence a proper coloring's classes are families of edges
any two of which share an endpoint — each class is a star (all edges through
one center) or a triangle.  A partition of E(W) into such parts is an
ST-partition; parts biject with color classes, so the chromatic number is
the minimum number of parts.

Vertices of W are the ground elements 1..n everywhere in this module (the
underlying Graph object indexes them 0-based; `build_w_graph` documents the
shift).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .colorings import Coloring, validate_coloring
from .errors import InternalContractError
from .hypergraph import Graph, Hypergraph, build_stable_kneser
from .subsets import KSubset, is_vec_stable

STAR = "STAR"
TRIANGLE = "TRIANGLE"


@dataclass(frozen=True)
class STPart:
    """One part: a star (edges sharing the designated center) or a triangle
    (exactly three edges on three vertices).  Edges are (i, j) pairs of
    ground elements, i < j; `center` is present iff kind == STAR."""

    kind: str
    edges: tuple
    center: Optional[int] = None


@dataclass(frozen=True)
class STPartition:
    parts: tuple  # of STPart; edge sets disjoint, union = E(W)


@dataclass(frozen=True)
class EdgeBijection:
    """Identity correspondence between KG^2(n,2)_(s1,s2) vertices and W edges."""

    n: int
    s1: int
    s2: int
    vertex_to_edge: tuple  # KG vertex id -> (i, j)
    edge_to_vertex: dict  # (i, j) -> KG vertex id


@dataclass(frozen=True)
class STPropertyReport:
    """Violations of the two structural properties of an ST-partition:

    (1) no vertex of a triangle part is the center of a star part;
    (2) every circuit lying entirely inside triangle-part edges is itself a
        triangle (equivalently: each 2-connected block of the triangle-edge
        subgraph is a single edge or a single triangle).
    """

    center_on_triangle: tuple  # (center, star_index, triangle_index) rows
    long_circuits: tuple  # vertex tuples of circuits of length >= 4

    @property
    def ok(self) -> bool:
        return not self.center_on_triangle and not self.long_circuits


def build_w_graph(n: int, s1: int, s2: int) -> Graph:
    """Graph on [n]: i < j adjacent iff s1 <= j - i <= n - s2.

    The returned Graph stores vertex i of [n] at id i - 1.
    """
    if n < 1:
        raise ValueError(f"ground set size must be >= 1, got {n}")
    if s1 < 1 or s2 < 1:
        raise ValueError(f"gap bounds must be >= 1, got ({s1}, {s2})")
    rows = [0] * n
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if s1 <= j - i <= n - s2:
                rows[i - 1] |= 1 << (j - 1)
                rows[j - 1] |= 1 << (i - 1)
    return Graph(vertex_count=n, adjacency=tuple(rows))


def w_edges(G: Graph) -> list:
    """Edges of a window graph as (i, j) ground-element pairs, i < j."""
    return [(u + 1, v + 1) for u, v in G.edges()]


def kneser_edge_bijection(n: int, s1: int, s2: int) -> EdgeBijection:
    """Check and return the vertex-of-KG <-> edge-of-W correspondence.

    Every 2-subset of [n] is verified to be (s1, s2)-stable exactly when it
    satisfies the window condition; a mismatch would falsify the
    line-graph-complement correspondence and raises an internal-contract
    error.
    """
    H = build_stable_kneser(n, 2, 2, (s1, s2))
    edge_set = set()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            window = s1 <= j - i <= n - s2
            stable = is_vec_stable(KSubset.from_elements((i, j), n), n, (s1, s2))
            if window != stable:
                raise InternalContractError(
                    f"pair ({i},{j}): window condition {window} but "
                    f"stability {stable}"
                )
            if window:
                edge_set.add((i, j))
    vertex_to_edge = tuple(A.elements for A in H.vertices)
    if set(vertex_to_edge) != edge_set:
        raise InternalContractError("vertex pairs differ from window edges")
    return EdgeBijection(
        n=n,
        s1=s1,
        s2=s2,
        vertex_to_edge=vertex_to_edge,
        edge_to_vertex={e: v for v, e in enumerate(vertex_to_edge)},
    )


# ---------------------------------------------------------------------------
# colorings <-> partitions


def _classify_class(edges: list) -> STPart:
    """A pairwise-intersecting edge family is a star or a triangle."""
    verts = set()
    for e in edges:
        verts.update(e)
    if len(edges) == 3 and len(verts) == 3:
        return STPart(kind=TRIANGLE, edges=tuple(sorted(edges)))
    common = set(edges[0])
    for e in edges[1:]:
        common &= set(e)
    if not common:
        raise InternalContractError(
            f"class {sorted(edges)} has no common endpoint and is no "
            f"triangle; it cannot come from a proper coloring"
        )
    center = min(common)  # two candidates only for a single edge
    return STPart(kind=STAR, edges=tuple(sorted(edges)), center=center)


def coloring_to_st_partition(H: Hypergraph, c: Coloring) -> STPartition:
    """Convert a proper coloring of KG^2(n,2)_(s1,s2) to an ST-partition.

    Classes are scanned in ascending color order, so part order is
    deterministic.  An improper coloring is rejected as an argument error;
    a class that is neither a star nor a triangle cannot then occur.
    """
    if H.k != 2 or H.r != 2:
        raise ValueError(
            f"ST-partitions need k == 2 and r == 2, got k={H.k} r={H.r}"
        )
    bij = kneser_edge_bijection(H.n, H.svec[0], H.svec[1])
    check = validate_coloring(H, c)
    if not check.proper:
        edges = [bij.vertex_to_edge[v] for v in check.violating_edge]
        raise ValueError(
            f"coloring is improper: disjoint class members {edges}"
        )
    by_color: dict = {}
    for v, col in enumerate(c.assignment):
        by_color.setdefault(col, []).append(bij.vertex_to_edge[v])
    parts = [_classify_class(by_color[col]) for col in sorted(by_color)]
    return STPartition(parts=tuple(parts))


def _validate_partition(G: Graph, P: STPartition) -> None:
    all_edges = set(w_edges(G))
    seen: set = set()
    for idx, part in enumerate(P.parts):
        edges = [tuple(e) for e in part.edges]
        if not edges:
            raise ValueError(f"part {idx} has no edges")
        for e in edges:
            if e not in all_edges:
                raise ValueError(f"part {idx} edge {e} is not an edge of W")
            if e in seen:
                raise ValueError(f"edge {e} appears in more than one part")
            seen.add(e)
        if part.kind == TRIANGLE:
            verts = set()
            for e in edges:
                verts.update(e)
            if len(edges) != 3 or len(verts) != 3:
                raise ValueError(f"part {idx} is not a 3-circuit: {edges}")
        elif part.kind == STAR:
            if part.center is None:
                raise ValueError(f"star part {idx} has no designated center")
            if any(part.center not in e for e in edges):
                raise ValueError(
                    f"part {idx}: not every edge contains center {part.center}"
                )
        else:
            raise ValueError(f"part {idx} has unknown kind {part.kind!r}")
    if seen != all_edges:
        missing = sorted(all_edges - seen)
        raise ValueError(f"parts do not cover E(W); missing {missing}")


def st_partition_to_coloring(H: Hypergraph, P: STPartition) -> Coloring:
    """Color each KG vertex by the index of the part holding its W-edge.

    The partition is validated against W(H.n, s1, s2) first (argument error
    on failure); validity makes the resulting coloring proper with
    palette_size == number of parts.
    """
    if H.k != 2 or H.r != 2:
        raise ValueError(
            f"ST-partitions need k == 2 and r == 2, got k={H.k} r={H.r}"
        )
    bij = kneser_edge_bijection(H.n, H.svec[0], H.svec[1])
    G = build_w_graph(H.n, H.svec[0], H.svec[1])
    _validate_partition(G, P)
    assignment = [0] * H.vertex_count
    for idx, part in enumerate(P.parts):
        for e in part.edges:
            assignment[bij.edge_to_vertex[tuple(e)]] = idx + 1
    return Coloring(
        assignment=tuple(assignment),
        palette_size=len(P.parts),
        scheme="st-partition",
    )


# ---------------------------------------------------------------------------
# structural checks


def is_butterfly_free(G: Graph) -> Optional[tuple]:
    """Search for an induced butterfly: triangles sharing exactly one vertex.

    Returns None when butterfly-free, else the lexicographically first
    5-tuple of vertex ids inducing one (degrees within the induced subgraph
    are 4, 2, 2, 2, 2 — which forces precisely two triangles glued at the
    degree-4 vertex).
    """
    from itertools import combinations

    V = G.vertex_count
    for five in combinations(range(V), 5):
        degs = []
        edges = 0
        for u in five:
            d = 0
            for v in five:
                if u != v and G.adjacency[u] >> v & 1:
                    d += 1
            degs.append(d)
            edges += d
        if edges != 12:  # 6 edges
            continue
        if sorted(degs) == [2, 2, 2, 2, 4]:
            return five
    return None


def _edge_blocks(edges: list):
    """2-connected blocks (as edge lists) of the graph given by `edges`.

    A circuit always lies inside a single block, so every block being a
    lone edge or a triangle is equivalent to every circuit being a triangle
    (a 2-connected graph on >= 4 vertices always contains a circuit of
    length >= 4).
    """
    adj: dict = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    index: dict = {}
    low: dict = {}
    stack: list = []
    blocks = []
    counter = [0]

    def dfs(u: int, parent: Optional[tuple]) -> None:
        index[u] = low[u] = counter[0]
        counter[0] += 1
        for v in adj[u]:  # deterministic: insertion order
            e = (min(u, v), max(u, v))
            if e == parent:
                continue
            if v in index:
                if index[v] < index[u]:  # back edge to an ancestor
                    stack.append(e)
                    low[u] = min(low[u], index[v])
                continue
            stack.append(e)
            dfs(v, e)
            low[u] = min(low[u], low[v])
            if low[v] >= index[u]:
                block = []
                while True:
                    be = stack.pop()
                    block.append(be)
                    if be == e:
                        break
                blocks.append(block)

    for u in sorted(adj):
        if u not in index:
            dfs(u, None)
    return blocks


def _long_circuit_in_block(block_edges: list) -> tuple:
    """A simple circuit of length >= 4 inside a non-triangle block."""
    adj: dict = {}
    for u, v in block_edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    start = min(adj)
    path = [start]
    on_path = {start}

    def extend() -> Optional[tuple]:
        u = path[-1]
        for v in sorted(adj[u]):
            if v == start and len(path) >= 4:
                return tuple(path)
            if v not in on_path:
                path.append(v)
                on_path.add(v)
                found = extend()
                if found is not None:
                    return found
                on_path.discard(v)
                path.pop()
        return None

    found = extend()
    if found is None:
        raise InternalContractError(
            f"block {sorted(block_edges)} is neither an edge nor a triangle "
            f"yet has no circuit of length >= 4"
        )
    return found


def check_st_properties(P: STPartition, G: Graph) -> STPropertyReport:
    """Check the two structural properties of a valid ST-partition of G."""
    _validate_partition(G, P)
    triangle_vertices: dict = {}  # vertex -> first triangle part index
    triangle_edges: list = []
    for idx, part in enumerate(P.parts):
        if part.kind == TRIANGLE:
            for e in part.edges:
                triangle_edges.append(tuple(e))
                for x in e:
                    triangle_vertices.setdefault(x, idx)
    bad_centers = []
    for idx, part in enumerate(P.parts):
        if part.kind == STAR and part.center in triangle_vertices:
            bad_centers.append((part.center, idx, triangle_vertices[part.center]))
    long_circuits = []
    for block in _edge_blocks(triangle_edges):
        if len(block) <= 1:
            continue
        verts = set()
        for e in block:
            verts.update(e)
        if len(block) == 3 and len(verts) == 3:
            continue
        long_circuits.append(_long_circuit_in_block(block))
    return STPropertyReport(
        center_on_triangle=tuple(bad_centers), long_circuits=tuple(long_circuits)
    )


# ---------------------------------------------------------------------------
# serialization


def st_partition_to_json(P: STPartition) -> str:
    parts = []
    for part in P.parts:
        obj: dict = {"kind": part.kind, "edges": [list(e) for e in part.edges]}
        if part.kind == STAR:
            obj["center"] = part.center
        parts.append(obj)
    return json.dumps({"parts": parts})


def st_partition_from_json(text: str) -> STPartition:
    obj = json.loads(text)
    parts = []
    for p in obj["parts"]:
        kind = p["kind"]
        if kind not in (STAR, TRIANGLE):
            raise ValueError(f"unknown part kind {kind!r}")
        parts.append(
            STPart(
                kind=kind,
                edges=tuple(tuple(int(x) for x in e) for e in p["edges"]),
                center=p.get("center"),
            )
        )
    return STPartition(parts=tuple(parts))

"""Exact chromatic numbers, independence numbers and disjoint packings.

The solver decides t-colorability of a stable Kneser hypergraph exactly and
deterministically.  For graphs (r = 2) it runs a three-stage ladder, each
stage a complete decision procedure, escalating only when the previous stage
exhausts its work allowance:

1. branch and bound over colorings: maximum-saturation vertex selection,
   greedy-clique color preassignment, new-color cap (kernel
   ``decide_graph_coloring``);
2. recursive class splitting: fix the highest-degree vertex v0; in any
   proper t-coloring the color class of v0 can be extended to a maximal
   independent set and every vertex of that set recolored to v0's color, so
   the graph is t-colorable iff for some maximal independent family F
   containing v0 the graph minus F is (t-1)-colorable.  Families are
   enumerated pivot-style in a fixed order and each child is decided by
   this same ladder.
3. clause-learning search on the direct color encoding with greedy-clique
   units and color-precedence symmetry breaking (kernel ``cdcl_decide``).

For r >= 3 the ladder has two stages: branch and bound over vertices in
descending disjointness-degree order with an incremental packing check
(kernel ``decide_hyper_coloring``), then clause-learning search on the
materialized hyperedge list (one r-literal clause per hyperedge and color).

Refutations may first be attempted on a gap-strengthened sub-hypergraph:
raising the wraparound gap bound to the smallest leading gap bound keeps a
subset of the vertices, and non-colorability of an induced part transfers
to the whole.  The strengthened instance is strictly smaller, and on the
hard refutation instances measured it carries essentially all the
difficulty, so the attempt is cheap insurance: its failure falls through to
the direct decision.

Budgets are deterministic work units, not wall-clock: one branch-and-bound
node costs 1 unit, one learned-clause conflict 200 units, one enumerated
maximal family 500 units.  As a rough guide the compiled backend clears
3-6 million units per second.  A call that exhausts its budget returns the
``INDETERMINATE`` sentinel (decisions) or an indeterminate-status result
(aggregates) — never a wrong answer.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .colorings import Coloring, block_coloring, validate_coloring
from .errors import CapacityError, InternalContractError
from .hypergraph import (
    Graph,
    Hypergraph,
    build_stable_kneser,
    class_has_r_disjoint,
    enumerate_hyperedges,
    to_graph,
)
from .kernels import get_kernels

#: Chromatic number of the empty hypergraph (no vertex needs any color, and
#: every palette, including the empty one, properly colors it).
NEG_INFINITY = float("-inf")


class _IndeterminateType:
    """Outcome of a decision whose work budget ran out: not SAT, not refuted.

    Falsy, like None, so ``if result:`` means "a coloring was found"; use
    ``result is None`` / ``result is INDETERMINATE`` to tell the other two
    outcomes apart.
    """

    _singleton = None

    def __new__(cls):
        if cls._singleton is None:
            cls._singleton = super().__new__(cls)
        return cls._singleton

    def __repr__(self):
        return "INDETERMINATE"

    def __bool__(self):
        return False


INDETERMINATE = _IndeterminateType()

# Work-unit prices and stage allowances (see module docstring).
UNITS_PER_NODE = 1
UNITS_PER_CONFLICT = 200
UNITS_PER_FAMILY = 500
UNITS_PER_EDGE = 10
STAGE1_NODES = 12_000_000  # direct branch-and-bound, top of the ladder
SPLIT_CHILD_NODES = 8_000_000  # branch-and-bound inside each split child
HYPER_STAGE1_NODES = 4_000_000  # r >= 3 branch-and-bound before clause learning
MAX_CNF_EDGES = 2_000_000  # refuse to materialize more hyperedges than this
MIN_CDCL_CONFLICTS = 20_000  # below this the last stage is not worth starting
DEFAULT_DECISION_UNITS = 400_000_000
DEFAULT_CHROMATIC_UNITS = 1_200_000_000
DEFAULT_ALPHA_NODES = 200_000_000


class _Pool:
    """Mutable work-unit counter shared by every stage of one solver call."""

    __slots__ = ("left",)

    def __init__(self, units: int):
        self.left = int(units)

    def grant(self, cap: int) -> int:
        return cap if cap < self.left else self.left

    def spend(self, used: int) -> None:
        self.left -= used
        if self.left < 0:
            self.left = 0


# ---------------------------------------------------------------------------
# results


@dataclass(frozen=True)
class ChiResult:
    """Outcome of a chromatic-number computation.

    ``chi`` is an int for nonempty instances, ``NEG_INFINITY`` for the empty
    one, and None when the budget ran out (then ``status`` is
    "indeterminate" and ``bounds`` brackets the true value).  ``certificate``
    is a proper coloring whose palette size equals ``chi`` (absent only for
    the empty instance); on indeterminate outcomes it is the best proper
    coloring found, matching ``bounds[1]``.
    """

    chi: Union[int, float, None]
    certificate: Optional[Coloring]
    lower_bound_witness: Optional[str]
    elapsed: float
    status: str = "exact"  # "exact" | "indeterminate"
    bounds: Optional[tuple] = None  # (low, high) bracket when indeterminate


@dataclass(frozen=True)
class AlphaResult:
    alpha: int
    witness: tuple  # vertex ids, ascending, pairwise non-adjacent
    elapsed: float


@dataclass(frozen=True)
class PackingResult:
    size: int
    witness: tuple  # vertex ids, ascending, pairwise disjoint
    chi_lower_bound: int  # ceil(size / (r - 1))
    elapsed: float


def chi_result_to_json(res: ChiResult) -> str:
    chi: object = res.chi
    if chi == NEG_INFINITY:
        chi = "-inf"  # keep the document strict-JSON parseable
    return json.dumps(
        {
            "chi": chi,
            "status": res.status,
            "certificate": None
            if res.certificate is None
            else {
                "palette_size": res.certificate.palette_size,
                "assignment": list(res.certificate.assignment),
            },
            "lower_bound_witness": res.lower_bound_witness,
            "bounds": list(res.bounds) if res.bounds is not None else None,
            "elapsed": res.elapsed,
        }
    )


def alpha_result_to_json(res: AlphaResult) -> str:
    return json.dumps(
        {"alpha": res.alpha, "witness": list(res.witness), "elapsed": res.elapsed}
    )


def packing_result_to_json(res: PackingResult) -> str:
    return json.dumps(
        {
            "size": res.size,
            "witness": list(res.witness),
            "chi_lower_bound": res.chi_lower_bound,
            "elapsed": res.elapsed,
        }
    )


# ---------------------------------------------------------------------------
# r = 2 ladder


class _GraphCtx:
    """Adjacency of the disjointness graph as arbitrary-width int rows."""

    __slots__ = ("adj", "masks", "V")

    def __init__(self, H: Hypergraph):
        G = to_graph(H)
        self.adj = G.adjacency
        self.masks = H.masks
        self.V = G.vertex_count


def _bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _subgraph_arrays(ctx: _GraphCtx, keep: int, ids: list):
    pos = {v: i for i, v in enumerate(ids)}
    nV = len(ids)
    W = (nV + 63) // 64
    sadj = np.zeros((nV, W), np.uint64)
    deg = np.zeros(nV, np.int64)
    for i, v in enumerate(ids):
        for u in _bits(ctx.adj[v] & keep):
            j = pos[u]
            sadj[i, j >> 6] |= np.uint64(1 << (j & 63))
            deg[i] += 1
    return pos, sadj, deg


def _greedy_disjoint(masks, ids, cap: int) -> list:
    """Greedily collect pairwise-disjoint vertices (a clique of the graph)."""
    order = sorted(ids, key=lambda v: (bin(masks[v]).count("1"), v))
    used = 0
    out = []
    for v in order:
        if masks[v] & used == 0:
            out.append(v)
            used |= masks[v]
            if len(out) >= cap:
                break
    return out


def _maximal_families_containing(adj, keep: int, v0: int) -> list:
    """All maximal independent sets (as bitmasks) of the induced subgraph on
    `keep` that contain v0, in a fixed pivot-enumeration order."""
    out = []

    def bk(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        px = p | x
        best, pivot = -1, -1
        m = px
        while m:
            b = m & -m
            u = b.bit_length() - 1
            m ^= b
            c = bin(p & ~adj[u] & keep).count("1")
            if c > best:
                best, pivot = c, u
        non_nbr = ~adj[pivot] & keep & ~(1 << pivot)
        m = p & ~non_nbr
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            nb = ~adj[v] & keep & ~(1 << v)
            bk(r | b, p & nb, x & nb)
            p ^= b
            x |= b

    bk(1 << v0, ~adj[v0] & keep & ~(1 << v0), 0)
    return out


def _coloring_cnf(ctx: _GraphCtx, t: int, clique: list):
    """Direct color encoding: variable v*t+c means vertex v has color c.

    At-least-one per vertex, a binary clause per edge and color, unit
    clauses pinning the clique, and color-precedence clauses (a color
    beyond the clique may appear at v only if the previous color appears
    at some earlier vertex): together satisfiability is exactly
    t-colorability, with the lowest true color per vertex a proper
    assignment.
    """
    V = ctx.V
    lits: list = []
    starts = [0]
    for v in range(V):
        for c in range(t):
            lits.append(2 * (v * t + c))
        starts.append(len(lits))
    for u in range(V):
        row = ctx.adj[u] >> (u + 1) << (u + 1)
        for v in _bits(row):
            for c in range(t):
                lits.append(2 * (u * t + c) + 1)
                lits.append(2 * (v * t + c) + 1)
                starts.append(len(lits))
    units = [2 * (q * t + i) for i, q in enumerate(clique)]
    for c in range(len(clique) + 1, t):
        for v in range(V):
            if v == 0:
                units.append(2 * (0 * t + c) + 1)
                continue
            lits.append(2 * (v * t + c) + 1)
            for u in range(v):
                lits.append(2 * (u * t + (c - 1)))
            starts.append(len(lits))
    return (
        np.array(lits, np.int32),
        np.array(starts, np.int64),
        np.array(units, np.int32),
    )


def _decide_graph(ctx: _GraphCtx, keep: int, t: int, pool: _Pool, depth: int):
    """Ladder decision on the induced subgraph: (status, assignment).

    status 1 -> assignment maps every kept vertex id to a color in [0, t);
    status 0 -> refuted; status -1 -> budget exhausted.
    """
    kern = get_kernels()
    ids = [v for v in range(ctx.V) if keep >> v & 1]
    nV = len(ids)
    if nV == 0:
        return 1, {}
    if t <= 0:
        return 0, None
    if t >= nV:
        return 1, {v: i for i, v in enumerate(ids)}

    pos, sadj, deg = _subgraph_arrays(ctx, keep, ids)
    clique = _greedy_disjoint(ctx.masks, ids, t + 1)
    clique_local = np.array(sorted(pos[v] for v in clique), np.int64)

    grant = pool.grant(STAGE1_NODES if depth == 0 else SPLIT_CHILD_NODES)
    if grant <= 0:
        return -1, None
    st, colors, nodes = kern.decide_graph_coloring(sadj, deg, t, clique_local, grant)
    pool.spend(int(nodes) * UNITS_PER_NODE)
    if st == 1:
        return 1, {v: int(colors[pos[v]]) for v in ids}
    if st == 0:
        return 0, None

    # Stage 2: split on the maximal independent families through the
    # highest-degree vertex.  Some family contains v0's whole color class.
    v0 = max(ids, key=lambda v: (bin(ctx.adj[v] & keep).count("1"), -v))
    families = _maximal_families_containing(ctx.adj, keep, v0)
    pool.spend(len(families) * UNITS_PER_FAMILY)
    indeterminate = False
    for fam in families:
        if pool.left <= 0:
            indeterminate = True
            break
        st2, asg = _decide_graph(ctx, keep & ~fam, t - 1, pool, depth + 1)
        if st2 == 1:
            for v in _bits(fam):
                asg[v] = t - 1
            return 1, asg
        if st2 == -1:
            indeterminate = True
            break
    if not indeterminate:
        return 0, None

    # Stage 3: clause-learning search, whole-graph calls only.
    if depth == 0 and keep == (1 << ctx.V) - 1:
        conflicts = pool.left // UNITS_PER_CONFLICT
        if conflicts >= MIN_CDCL_CONFLICTS:
            lits, starts, units = _coloring_cnf(ctx, t, clique[:t])
            st3, model, used = kern.cdcl_decide(
                ctx.V * t, lits, starts, units, conflicts
            )
            pool.spend(int(used) * UNITS_PER_CONFLICT)
            if st3 == 1:
                asg = {}
                for v in range(ctx.V):
                    for c in range(t):
                        if model[v * t + c]:
                            asg[v] = c
                            break
                return 1, asg
            if st3 == 0:
                return 0, None
    return -1, None


# ---------------------------------------------------------------------------
# r >= 3 path


def _disjointness_order(H: Hypergraph) -> np.ndarray:
    masks = H.masks
    V = H.vertex_count
    degree = [0] * V
    for a in range(V):
        ma = masks[a]
        for b in range(a + 1, V):
            if ma & masks[b] == 0:
                degree[a] += 1
                degree[b] += 1
    order = sorted(range(V), key=lambda v: (-degree[v], v))
    return np.array(order, np.int64)


def _hyper_cnf(V: int, t: int, edges: list):
    """Color encoding for r >= 3: at-least-one per vertex, one r-literal
    clause per hyperedge and color, and color-precedence clauses.  Unlike
    the graph case there are no forced-distinct vertex pairs (disjoint
    vertices may share a color when r > 2), so nothing is pinned; the
    precedence chain alone is sound, since any proper coloring can be
    relabeled by order of first use."""
    lits: list = []
    starts = [0]
    for v in range(V):
        for c in range(t):
            lits.append(2 * (v * t + c))
        starts.append(len(lits))
    for e in edges:
        for c in range(t):
            for v in e:
                lits.append(2 * (v * t + c) + 1)
            starts.append(len(lits))
    units = []
    for c in range(1, t):
        for v in range(V):
            if v == 0:
                units.append(2 * (0 * t + c) + 1)
                continue
            lits.append(2 * (v * t + c) + 1)
            for u in range(v):
                lits.append(2 * (u * t + (c - 1)))
            starts.append(len(lits))
    return (
        np.array(lits, np.int32),
        np.array(starts, np.int64),
        np.array(units, np.int32),
    )


def _decide_hyper(H: Hypergraph, t: int, pool: _Pool):
    kern = get_kernels()
    V = H.vertex_count
    if V == 0:
        return 1, {}
    if t <= 0:
        return 0, None
    if t >= V:
        return 1, {v: v for v in range(V)}
    gmask = np.array(H.masks, np.uint64)
    order = _disjointness_order(H)
    grant = pool.grant(HYPER_STAGE1_NODES)
    if grant <= 0:
        return -1, None
    st, colors, nodes = kern.decide_hyper_coloring(
        gmask, H.n, H.k, H.r, t, order, grant
    )
    pool.spend(int(nodes) * UNITS_PER_NODE)
    if st == 1:
        return 1, {v: int(colors[v]) for v in range(V)}
    if st == 0:
        return 0, None

    # Stage 2: materialize the hyperedges and run clause-learning search.
    cap = min(MAX_CNF_EDGES, pool.left // UNITS_PER_EDGE)
    edges = list(enumerate_hyperedges(H, limit=cap + 1))
    pool.spend(len(edges) * UNITS_PER_EDGE)
    if len(edges) > cap:
        return -1, None
    conflicts = pool.left // UNITS_PER_CONFLICT
    if conflicts < MIN_CDCL_CONFLICTS:
        return -1, None
    lits, starts, units = _hyper_cnf(V, t, edges)
    st2, model, used = kern.cdcl_decide(V * t, lits, starts, units, conflicts)
    pool.spend(int(used) * UNITS_PER_CONFLICT)
    if st2 == 1:
        asg = {}
        for v in range(V):
            for c in range(t):
                if model[v * t + c]:
                    asg[v] = c
                    break
        return 1, asg
    return (0, None) if st2 == 0 else (-1, None)


# ---------------------------------------------------------------------------
# decisions


def _strengthened_svec(H: Hypergraph) -> Optional[tuple]:
    """Raise the wraparound gap bound to the smallest leading bound.

    The result constrains vertices at least as much in every coordinate, so
    its hypergraph's vertices form a subset of H's and a refutation on it
    transfers to H.  Returns None when no strict strengthening exists.
    """
    s = H.svec
    if len(s) < 2:
        return None
    m = min(s[:-1])
    if s[-1] >= m:
        return None
    return s[:-1] + (m,)


def _decide(H: Hypergraph, t: int, pool: _Pool):
    """(status, assignment) decision with the gap-strengthening pre-stage."""
    stronger = _strengthened_svec(H)
    if stronger is not None:
        Hs = build_stable_kneser(H.n, H.k, H.r, stronger)
        if 0 < Hs.vertex_count < H.vertex_count:
            if Hs.r == 2:
                st, _ = _decide_graph(_GraphCtx(Hs), (1 << Hs.vertex_count) - 1, t, pool, 0)
            else:
                st, _ = _decide_hyper(Hs, t, pool)
            if st == 0:
                return 0, None  # an induced part already needs more colors
    if H.r == 2:
        return _decide_graph(_GraphCtx(H), (1 << H.vertex_count) - 1, t, pool, 0)
    return _decide_hyper(H, t, pool)


def _normalized_coloring(assignment: dict, V: int) -> Coloring:
    """Relabel raw colors to 1..p in order of first use by vertex id."""
    remap: dict = {}
    out = []
    for v in range(V):
        raw = assignment[v]
        if raw not in remap:
            remap[raw] = len(remap) + 1
        out.append(remap[raw])
    return Coloring(assignment=tuple(out), palette_size=len(remap), scheme="search")


def is_t_colorable(H: Hypergraph, t: int, budget: Optional[int] = None):
    """Decide whether H admits a proper t-coloring.

    Returns a proper Coloring using at most t colors, None when no such
    coloring exists, or INDETERMINATE when the work budget (default
    DEFAULT_DECISION_UNITS units) ran out first.  Deterministic: identical
    arguments give identical outcomes, witnesses included, on every backend.
    """
    if t < 1:
        raise ValueError(f"palette size t must be >= 1, got {t}")
    if H.vertex_count == 0:
        return Coloring(assignment=(), palette_size=0, scheme="search")
    pool = _Pool(DEFAULT_DECISION_UNITS if budget is None else budget)
    st, asg = _decide(H, t, pool)
    if st == 1:
        coloring = _normalized_coloring(asg, H.vertex_count)
        check = validate_coloring(H, coloring)
        if not check.proper or coloring.palette_size > t:
            raise InternalContractError(
                f"search produced an invalid witness for t={t}: {check}"
            )
        return coloring
    return None if st == 0 else INDETERMINATE


def chromatic_number(
    H: Hypergraph,
    upper_hint: Optional[Coloring] = None,
    budget: Optional[int] = None,
) -> ChiResult:
    """Exact chromatic number by downward scan from a proper upper bound.

    Starts from `upper_hint` (default: block_coloring(H)) and repeatedly
    decides one palette short of the best coloring known, so the final
    answer carries both a certificate coloring and a refuted decision at
    chi - 1.  The empty hypergraph gets NEG_INFINITY and no certificate; a
    nonempty hypergraph with no hyperedge gets chi == 1 directly.
    """
    t0 = time.perf_counter()
    if H.vertex_count == 0:
        return ChiResult(
            chi=NEG_INFINITY,
            certificate=None,
            lower_bound_witness="empty vertex set: every palette works",
            elapsed=time.perf_counter() - t0,
        )
    if upper_hint is None:
        cert = block_coloring(H)
    else:
        check = validate_coloring(H, upper_hint)
        if not check.proper:
            raise ValueError(
                f"upper_hint is not a proper coloring: {check.violating_edge}"
            )
        if upper_hint.palette_size != check.colors_used:
            raise ValueError(
                f"upper_hint declares {upper_hint.palette_size} colors but "
                f"uses {check.colors_used}"
            )
        cert = upper_hint
    if class_has_r_disjoint(H, range(H.vertex_count)) is None:
        ones = Coloring(
            assignment=(1,) * H.vertex_count, palette_size=1, scheme="search"
        )
        return ChiResult(
            chi=1,
            certificate=ones,
            lower_bound_witness="vertex set nonempty: at least one color",
            elapsed=time.perf_counter() - t0,
        )

    pool = _Pool(DEFAULT_CHROMATIC_UNITS if budget is None else budget)
    lower_bound_witness = None
    while cert.palette_size > 1:
        target = cert.palette_size - 1
        st, asg = _decide(H, target, pool)
        if st == 1:
            nxt = _normalized_coloring(asg, H.vertex_count)
            if nxt.palette_size > target:
                raise InternalContractError(
                    f"witness for t={target} uses {nxt.palette_size} colors"
                )
            cert = nxt
            continue
        if st == 0:
            lower_bound_witness = (
                f"exhaustive search refuted every {target}-coloring"
            )
            break
        greedy = _greedy_disjoint(H.masks, range(H.vertex_count), H.vertex_count)
        low = max(1, -(-len(greedy) // (H.r - 1)))
        return ChiResult(
            chi=None,
            certificate=cert,
            lower_bound_witness=(
                f"greedy disjoint packing of {len(greedy)} vertices forces "
                f"at least {low} colors"
            ),
            elapsed=time.perf_counter() - t0,
            status="indeterminate",
            bounds=(low, cert.palette_size),
        )
    final = validate_coloring(H, cert)
    if not final.proper or cert.palette_size != final.colors_used:
        raise InternalContractError(f"final certificate failed validation: {final}")
    return ChiResult(
        chi=cert.palette_size,
        certificate=cert,
        lower_bound_witness=lower_bound_witness,
        elapsed=time.perf_counter() - t0,
    )


# ---------------------------------------------------------------------------
# independence and packing


def _rows_to_arrays(rows, V: int):
    W = (V + 63) // 64
    adj = np.zeros((V, W), np.uint64)
    for v in range(V):
        for u in _bits(rows[v]):
            adj[v, u >> 6] |= np.uint64(1 << (u & 63))
    return adj


def _witness_ids(words: np.ndarray) -> tuple:
    out = []
    for w, word in enumerate(words):
        for b in _bits(int(word)):
            out.append(w * 64 + b)
    return tuple(sorted(out))


def independence_number(
    G: Union[Graph, Hypergraph], budget: Optional[int] = None
) -> AlphaResult:
    """Exact maximum independent set size, with a witness set.

    Accepts a Graph or an r = 2 Hypergraph (its disjointness graph is then
    used).  Branch and bound; raises CapacityError if the node budget
    (default DEFAULT_ALPHA_NODES) runs out.
    """
    t0 = time.perf_counter()
    if isinstance(G, Hypergraph):
        G = to_graph(G)
    V = G.vertex_count
    if V == 0:
        return AlphaResult(alpha=0, witness=(), elapsed=time.perf_counter() - t0)
    kern = get_kernels()
    adj = _rows_to_arrays(G.adjacency, V)
    nodes_cap = DEFAULT_ALPHA_NODES if budget is None else int(budget)
    st, best, words, _nodes = kern.max_independent_set(adj, nodes_cap)
    if st != 1:
        raise CapacityError(
            f"independence search exhausted its {nodes_cap}-node budget"
        )
    witness = _witness_ids(words)
    if len(witness) != int(best):
        raise InternalContractError(
            f"witness size {len(witness)} != reported alpha {int(best)}"
        )
    for i, u in enumerate(witness):
        for v in witness[i + 1 :]:
            if G.adjacency[u] >> v & 1:
                raise InternalContractError(f"witness vertices {u},{v} adjacent")
    return AlphaResult(
        alpha=int(best), witness=witness, elapsed=time.perf_counter() - t0
    )


def max_disjoint_packing(
    H: Hypergraph, budget: Optional[int] = None
) -> PackingResult:
    """Largest collection of pairwise-disjoint vertices, with a witness.

    Any color class holding r of these contains a hyperedge, so
    ceil(size / (r-1)) lower-bounds the chromatic number (for r = 2 the
    packing is a clique of the disjointness graph and the bound is its
    size).  Raises CapacityError if the node budget runs out.
    """
    t0 = time.perf_counter()
    V = H.vertex_count
    if V == 0:
        return PackingResult(
            size=0, witness=(), chi_lower_bound=0, elapsed=time.perf_counter() - t0
        )
    # Pairwise-disjoint collections are the independent sets of the
    # intersection graph.
    masks = H.masks
    rows = [0] * V
    for a in range(V):
        ma = masks[a]
        for b in range(a + 1, V):
            if ma & masks[b] != 0:
                rows[a] |= 1 << b
                rows[b] |= 1 << a
    kern = get_kernels()
    adj = _rows_to_arrays(rows, V)
    nodes_cap = DEFAULT_ALPHA_NODES if budget is None else int(budget)
    st, best, words, _nodes = kern.max_independent_set(adj, nodes_cap)
    if st != 1:
        raise CapacityError(f"packing search exhausted its {nodes_cap}-node budget")
    witness = _witness_ids(words)
    union = 0
    count = 0
    for v in witness:
        union |= masks[v]
        count += bin(masks[v]).count("1")
    if len(witness) != int(best) or union.bit_count() != count:
        raise InternalContractError("packing witness is not pairwise disjoint")
    return PackingResult(
        size=int(best),
        witness=witness,
        chi_lower_bound=-(-int(best) // (H.r - 1)),
        elapsed=time.perf_counter() - t0,
    )

"""Single-source search kernels.

Every function in this file is written in nopython-compilable style: numpy
arrays in, numpy arrays and scalars out, no calls to other Python functions
(hence the inlined SWAR popcounts).  ``kernels.jit`` compiles these exact
functions with numba; ``kernels.plain`` exposes them uncompiled.  Both
backends therefore run the same algorithm instruction for instruction, which
is what the differential tests in tests/test_kernels.py rely on.

Conventions shared by the kernels:
  - graphs come as (V, W) uint64 bitset rows, W = ceil(V / 64) words;
  - statuses are 1 = satisfiable/found, 0 = refuted, -1 = budget exhausted;
  - budgets are node counts, not wall-clock (deterministic outcomes).
"""

import numpy as np

U1 = np.uint64(1)
U0 = np.uint64(0)
M1 = np.uint64(0x5555555555555555)
M2 = np.uint64(0x3333333333333333)
M4 = np.uint64(0x0F0F0F0F0F0F0F0F)


def decide_graph_coloring(adj, deg, t, clique, node_budget):
    """Decide t-colorability of a graph by branch and bound.

    Vertex selection is maximum saturation (number of distinct colors on
    the neighbourhood), ties broken by static degree then lowest id.  Color
    symmetry is broken twice: the vertices of `clique` (pairwise adjacent)
    are preassigned colors 0..len(clique)-1 up front, which is sound because
    any proper coloring can be relabeled to agree there, and a branch vertex
    may only use colors up to one past the maximum color in use.

    Returns (status, colors, nodes): colors is the full assignment when
    status == 1, an empty array otherwise.
    """
    V, W = adj.shape
    color = np.full(V, -1, np.int64)
    cnt = np.zeros((V, t), np.int64)  # cnt[v, c] = colored neighbours of v in c
    sat = np.zeros(V, np.int64)
    nq = len(clique)
    nodes = 0
    if nq > t:
        return 0, np.empty(0, np.int64), nodes
    for i in range(nq):
        v = clique[i]
        color[v] = i
        for w in range(W):
            m = adj[v, w]
            while m != U0:
                b = m & (~m + U1)
                x = b - U1
                x = x - ((x >> U1) & M1)
                x = (x & M2) + ((x >> np.uint64(2)) & M2)
                x = (x + (x >> np.uint64(4))) & M4
                x = x + (x >> np.uint64(8))
                x = x + (x >> np.uint64(16))
                x = x + (x >> np.uint64(32))
                u = w * 64 + int(x & np.uint64(127))
                m ^= b
                if color[u] < 0:
                    if cnt[u, i] == 0:
                        sat[u] += 1
                    cnt[u, i] += 1
    maxused = np.empty(V + 1, np.int64)
    maxused[nq] = nq
    sel = np.empty(V, np.int64)
    trial = np.empty(V, np.int64)
    depth = nq
    mode = 0  # 0 descend, 1 advance, 2 backtrack
    while True:
        if mode == 0:
            if depth == V:
                return 1, color.copy(), nodes
            best = -1
            bs = np.int64(-1)
            bd = np.int64(-1)
            for v in range(V):
                if color[v] < 0:
                    s = sat[v]
                    if s > bs or (s == bs and deg[v] > bd):
                        best = v
                        bs = s
                        bd = deg[v]
            if bs >= t:
                mode = 2  # dead vertex: every color appears on its boundary
            else:
                sel[depth] = best
                trial[depth] = -1
                mode = 1
        elif mode == 1:
            v = sel[depth]
            cap = maxused[depth] + 1
            if cap > t:
                cap = t
            nc = -1
            for c in range(trial[depth] + 1, cap):
                if cnt[v, c] == 0:
                    nc = c
                    break
            if nc < 0:
                mode = 2
            else:
                trial[depth] = nc
                color[v] = nc
                nodes += 1
                if nodes >= node_budget:
                    return -1, np.empty(0, np.int64), nodes
                for w in range(W):
                    m = adj[v, w]
                    while m != U0:
                        b = m & (~m + U1)
                        x = b - U1
                        x = x - ((x >> U1) & M1)
                        x = (x & M2) + ((x >> np.uint64(2)) & M2)
                        x = (x + (x >> np.uint64(4))) & M4
                        x = x + (x >> np.uint64(8))
                        x = x + (x >> np.uint64(16))
                        x = x + (x >> np.uint64(32))
                        u = w * 64 + int(x & np.uint64(127))
                        m ^= b
                        if color[u] < 0:
                            if cnt[u, nc] == 0:
                                sat[u] += 1
                            cnt[u, nc] += 1
                nm = maxused[depth]
                if nc + 1 > nm:
                    nm = nc + 1
                depth += 1
                maxused[depth] = nm
                mode = 0
        else:
            if depth == nq:
                return 0, np.empty(0, np.int64), nodes
            depth -= 1
            v = sel[depth]
            c = trial[depth]
            color[v] = -1
            for w in range(W):
                m = adj[v, w]
                while m != U0:
                    b = m & (~m + U1)
                    x = b - U1
                    x = x - ((x >> U1) & M1)
                    x = (x & M2) + ((x >> np.uint64(2)) & M2)
                    x = (x + (x >> np.uint64(4))) & M4
                    x = x + (x >> np.uint64(8))
                    x = x + (x >> np.uint64(16))
                    x = x + (x >> np.uint64(32))
                    u = w * 64 + int(x & np.uint64(127))
                    m ^= b
                    if color[u] < 0:
                        cnt[u, c] -= 1
                        if cnt[u, c] == 0:
                            sat[u] -= 1
            mode = 1


def decide_hyper_coloring(gmask, n, k, r, t, order, node_budget):
    """Decide t-colorability of an r-uniform Kneser-type hypergraph.

    gmask[v] is the uint64 ground-set mask of vertex v; a hyperedge is any r
    pairwise-disjoint vertices.  Vertices are assigned in the order given
    (static), colors capped at one past the maximum in use.  After placing v
    into class c the kernel searches for r pairwise disjoint class members
    through v (any new monochromatic edge must involve v); finding one kills
    the color choice.

    Returns (status, colors, nodes) like decide_graph_coloring.
    """
    V = len(gmask)
    color = np.full(V, -1, np.int64)
    maxused = np.empty(V + 1, np.int64)
    maxused[0] = 0
    trial = np.empty(V, np.int64)
    # DFS scratch for the packing check
    st_v = np.empty(r + 1, np.int64)
    st_used = np.empty(r + 1, np.uint64)
    nodes = 0
    depth = 0
    mode = 0
    while True:
        if mode == 0:
            if depth == V:
                return 1, color.copy(), nodes
            trial[depth] = -1
            mode = 1
        elif mode == 1:
            v = order[depth]
            cap = maxused[depth] + 1
            if cap > t:
                cap = t
            nc = -1
            for c in range(trial[depth] + 1, cap):
                # would v complete r pairwise-disjoint members in class c?
                found = False
                if r * k <= n:
                    # DFS over class members in ascending id order; level sp
                    # resumes at st_v[sp] + 1 after a child pops back.
                    sp = 0
                    st_v[0] = -1
                    st_used[0] = gmask[v]
                    while sp >= 0:
                        if sp == r - 1:
                            found = True
                            break
                        nxt = st_v[sp] + 1
                        adv = False
                        while nxt < V:
                            if nxt != v and color[nxt] == c and gmask[nxt] & st_used[sp] == U0:
                                um = st_used[sp] | gmask[nxt]
                                x = um
                                x = x - ((x >> U1) & M1)
                                x = (x & M2) + ((x >> np.uint64(2)) & M2)
                                x = (x + (x >> np.uint64(4))) & M4
                                x = x + (x >> np.uint64(8))
                                x = x + (x >> np.uint64(16))
                                x = x + (x >> np.uint64(32))
                                usedbits = int(x & np.uint64(127))
                                # enough untouched ground elements for the rest?
                                if n - usedbits >= k * (r - 2 - sp):
                                    st_v[sp] = nxt
                                    st_v[sp + 1] = nxt
                                    st_used[sp + 1] = um
                                    sp += 1
                                    adv = True
                                    break
                            nxt += 1
                        if not adv:
                            sp -= 1
                if not found:
                    nc = c
                    break
            if nc < 0:
                mode = 2
            else:
                trial[depth] = nc
                color[v] = nc
                nodes += 1
                if nodes >= node_budget:
                    return -1, np.empty(0, np.int64), nodes
                nm = maxused[depth]
                if nc + 1 > nm:
                    nm = nc + 1
                depth += 1
                maxused[depth] = nm
                mode = 0
        else:
            if depth == 0:
                return 0, np.empty(0, np.int64), nodes
            depth -= 1
            color[order[depth]] = -1
            mode = 1


def max_independent_set(adj, node_budget):
    """Maximum independent set of a bitset graph by branch and bound.

    Branches on the highest-degree vertex of the candidate set (include /
    exclude), pruning when |chosen| + |candidates| cannot beat the best.
    Returns (status, best_size, witness_words, nodes); witness_words is the
    uint64 bitset of a maximum independent set (valid whatever the status:
    on status -1 it is the best found so far).
    """
    V, W = adj.shape
    cand = np.zeros((V + 1, W), np.uint64)
    chosen = np.zeros((V + 1, W), np.uint64)
    pick = np.empty(V + 1, np.int64)
    csize = np.empty(V + 1, np.int64)
    nsize = np.empty(V + 1, np.int64)
    state = np.empty(V + 1, np.int64)  # 0 = try include, 1 = try exclude, 2 = done
    for w in range(W):
        cand[0, w] = U0
    for v in range(V):
        cand[0, v // 64] |= U1 << np.uint64(v % 64)
    csize[0] = V
    nsize[0] = 0
    state[0] = 0
    best = np.int64(0)
    best_w = np.zeros(W, np.uint64)
    sp = 0
    nodes = 0
    while sp >= 0:
        nodes += 1
        if nodes >= node_budget:
            return -1, best, best_w.copy(), nodes
        if csize[sp] == 0 or nsize[sp] + csize[sp] <= best:
            if csize[sp] == 0 and nsize[sp] > best:
                best = nsize[sp]
                for w in range(W):
                    best_w[w] = chosen[sp, w]
            sp -= 1
            continue
        if state[sp] == 0:
            # choose branch vertex: max degree within candidates, tie min id
            bv = -1
            bd = np.int64(-1)
            for w in range(W):
                m = cand[sp, w]
                while m != U0:
                    b = m & (~m + U1)
                    x = b - U1
                    x = x - ((x >> U1) & M1)
                    x = (x & M2) + ((x >> np.uint64(2)) & M2)
                    x = (x + (x >> np.uint64(4))) & M4
                    x = x + (x >> np.uint64(8))
                    x = x + (x >> np.uint64(16))
                    x = x + (x >> np.uint64(32))
                    u = w * 64 + int(x & np.uint64(127))
                    m ^= b
                    d = np.int64(0)
                    for w2 in range(W):
                        y = adj[u, w2] & cand[sp, w2]
                        y = y - ((y >> U1) & M1)
                        y = (y & M2) + ((y >> np.uint64(2)) & M2)
                        y = (y + (y >> np.uint64(4))) & M4
                        y = y + (y >> np.uint64(8))
                        y = y + (y >> np.uint64(16))
                        y = y + (y >> np.uint64(32))
                        d += np.int64(y & np.uint64(127))
                    if d > bd:
                        bd = d
                        bv = u
            pick[sp] = bv
            state[sp] = 1
            # include bv: candidates lose bv and its neighbourhood
            v = bv
            for w in range(W):
                cand[sp + 1, w] = cand[sp, w] & ~adj[v, w]
                chosen[sp + 1, w] = chosen[sp, w]
            cand[sp + 1, v // 64] &= ~(U1 << np.uint64(v % 64))
            sz = np.int64(0)
            for w in range(W):
                nm2 = cand[sp + 1, w]
                nm2 = nm2 - ((nm2 >> U1) & M1)
                nm2 = (nm2 & M2) + ((nm2 >> np.uint64(2)) & M2)
                nm2 = (nm2 + (nm2 >> np.uint64(4))) & M4
                nm2 = nm2 + (nm2 >> np.uint64(8))
                nm2 = nm2 + (nm2 >> np.uint64(16))
                nm2 = nm2 + (nm2 >> np.uint64(32))
                sz += np.int64(nm2 & np.uint64(127))
            chosen[sp + 1, v // 64] |= U1 << np.uint64(v % 64)
            csize[sp + 1] = sz
            nsize[sp + 1] = nsize[sp] + 1
            state[sp + 1] = 0
            if nsize[sp + 1] > best:
                best = nsize[sp + 1]
                for w in range(W):
                    best_w[w] = chosen[sp + 1, w]
            sp += 1
        elif state[sp] == 1:
            # exclude pick[sp]
            v = pick[sp]
            state[sp] = 2
            for w in range(W):
                cand[sp + 1, w] = cand[sp, w]
                chosen[sp + 1, w] = chosen[sp, w]
            cand[sp + 1, v // 64] &= ~(U1 << np.uint64(v % 64))
            csize[sp + 1] = csize[sp] - 1
            nsize[sp + 1] = nsize[sp]
            state[sp + 1] = 0
            sp += 1
        else:
            sp -= 1
    return 1, best, best_w.copy(), nodes


def tucker_condition_scan(labels, neg_code, pow3, digits, max_witness):
    """Exhaustively check the two labeling conditions over all signed sets.

    labels[code] is the integer label of the signed set with ternary `code`
    (digit 0 = zero, 1 = plus, 2 = minus, least significant digit = first
    coordinate); labels[0] is ignored.  neg_code[code] is the code of the
    negated set; pow3[i] = 3**i; digits[code, i] = i-th ternary digit.

    Condition 1: label(-A) == -label(A) for every nonzero A.
    Condition 2: whenever A1 agrees with A2 on the support of A1 (A1 obtained
    from A2 by zeroing some coordinates) and |label(A1)| == |label(A2)|, the
    labels are equal.

    Returns (n_violations1, n_violations2, wit1, wit2) where wit1 is an array
    of codes (condition 1) and wit2 an array of (code1, code2) pairs, each
    truncated to max_witness entries.
    """
    size = len(labels)
    n = digits.shape[1]
    wit1 = np.empty(max_witness, np.int64)
    wit2 = np.empty((max_witness, 2), np.int64)
    n1 = 0
    n2 = 0
    pos = np.empty(n, np.int64)
    for code in range(1, size):
        if labels[neg_code[code]] != -labels[code]:
            if n1 < max_witness:
                wit1[n1] = code
            n1 += 1
    for code2 in range(1, size):
        l2 = labels[code2]
        a2 = abs(l2)
        # collect support positions and their ternary contributions
        z = 0
        for i in range(n):
            d = digits[code2, i]
            if d != 0:
                pos[z] = d * pow3[i]
                z += 1
        # walk all proper nonzero sub-supports (skip full = code2 itself)
        full = (1 << z) - 1
        sub = full - 1
        while sub > 0:
            code1 = 0
            m = sub
            idx = 0
            while m != 0:
                if m & 1:
                    code1 += pos[idx]
                m >>= 1
                idx += 1
            l1 = labels[code1]
            if abs(l1) == a2 and l1 != l2:
                if n2 < max_witness:
                    wit2[n2, 0] = code1
                    wit2[n2, 1] = code2
                n2 += 1
            sub -= 1
    return n1, n2, wit1[: min(n1, max_witness)].copy(), wit2[: min(n2, max_witness)].copy()

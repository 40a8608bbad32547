"""Deterministic conflict-driven clause-learning search (njit-able).

Branch-and-bound with any polynomially computable bound cannot refute
t-colorability of the hard vertex-transitive instances in the grids here
(their fractional chromatic number is far below the true one), so the solver
escalates to this engine: a self-contained CDCL search over a direct
encoding of the decision problem.  It is deliberately deterministic — integer
state plus a fixed-tie-break activity heuristic — so identical inputs yield
identical searches on every platform.

Literal encoding: variable v has positive literal 2v and negative literal
2v+1 (`lit ^ 1` negates).  The input clause stream must contain no clause of
size < 2 (put those in `units`), no duplicate literals, and no tautologies.

This file follows the same single-source rule as core.py: one function,
arrays in/out, no helper calls; kernels.jit compiles it, kernels.plain runs
it as-is.
"""

import numpy as np


def cdcl_decide(n_vars, in_lits, in_starts, units, conflict_budget):
    """Decide satisfiability.  Returns (status, model, conflicts) with
    status 1/0/-1 = SAT/UNSAT/budget; model is uint8[n_vars] (valid on SAT).
    """
    UNASSIGNED = np.int8(0)
    VTRUE = np.int8(1)
    VFALSE = np.int8(2)

    n_in = len(in_starts) - 1
    # clause arena (held in one growing int32 array)
    cap_lits = np.int64(len(in_lits) * 2 + 1024)
    cl_lits = np.empty(cap_lits, np.int32)
    cap_cl = np.int64(n_in * 2 + 1024)
    cl_start = np.empty(cap_cl, np.int64)
    cl_size = np.empty(cap_cl, np.int32)
    cl_learnt = np.empty(cap_cl, np.int8)
    n_cl = 0
    top = np.int64(0)

    # watch lists: node id = 2c + slot; head per literal, next per node
    head = np.full(2 * n_vars, -1, np.int64)
    wnext = np.empty(2 * cap_cl, np.int64)

    assigns = np.zeros(n_vars, np.int8)
    level = np.zeros(n_vars, np.int64)
    reason = np.full(n_vars, -1, np.int64)
    trail = np.empty(n_vars, np.int32)
    trail_sz = 0
    qhead = 0
    lim = np.zeros(n_vars + 2, np.int64)
    cur_level = 0

    saved = np.zeros(n_vars, np.int8)  # phase memory, default false
    activity = np.zeros(n_vars, np.float64)
    var_inc = 1.0

    seen = np.zeros(n_vars, np.int8)
    learnt_buf = np.empty(n_vars + 1, np.int32)
    min_stack = np.empty(n_vars + 1, np.int32)
    to_clear = np.empty(n_vars + 1, np.int32)

    model = np.zeros(n_vars, np.uint8)
    conflicts = np.int64(0)
    n_learnt_live = 0
    n_reduce = 0
    restart_seq = 1
    restart_left = np.int64(100)

    # ---- load original clauses -------------------------------------------
    for ci in range(n_in):
        a = in_starts[ci]
        b = in_starts[ci + 1]
        sz = b - a
        # (encoder guarantees sz >= 2)
        cl_start[n_cl] = top
        cl_size[n_cl] = sz
        cl_learnt[n_cl] = 0
        for j in range(sz):
            cl_lits[top + j] = in_lits[a + j]
        # attach watches on the first two literals
        for slot in range(2):
            lit = cl_lits[top + slot]
            node = 2 * n_cl + slot
            wnext[node] = head[lit]
            head[lit] = node
        top += sz
        n_cl += 1

    # ---- level-0 units ----------------------------------------------------
    for ui in range(len(units)):
        lit = units[ui]
        v = lit >> 1
        want = VTRUE if (lit & 1) == 0 else VFALSE
        if assigns[v] == UNASSIGNED:
            assigns[v] = want
            level[v] = 0
            reason[v] = -1
            trail[trail_sz] = lit
            trail_sz += 1
        elif assigns[v] != want:
            return 0, model, conflicts

    status = np.int8(-9)  # still running
    while status == np.int8(-9):
        # ---- propagate ----------------------------------------------------
        confl = np.int64(-1)
        while qhead < trail_sz:
            p = np.int64(trail[qhead])
            qhead += 1
            q = p ^ 1  # literal that just became false
            prev = np.int64(-1)
            cur = head[q]
            while cur != -1:
                c = cur >> 1
                w = cur & 1
                base = cl_start[c]
                ow = base + (1 - w)
                olit = np.int64(cl_lits[ow])
                ov = olit >> 1
                oval = assigns[ov] if (olit & 1) == 0 else (
                    VFALSE if assigns[ov] == VTRUE else (VTRUE if assigns[ov] == VFALSE else UNASSIGNED)
                )
                if oval == VTRUE:
                    prev = cur
                    cur = wnext[cur]
                    continue
                # search a non-false replacement beyond the watched pair
                found = np.int64(-1)
                for j in range(base + 2, base + cl_size[c]):
                    jl = np.int64(cl_lits[j])
                    jv = jl >> 1
                    jval = assigns[jv] if (jl & 1) == 0 else (
                        VFALSE if assigns[jv] == VTRUE else (VTRUE if assigns[jv] == VFALSE else UNASSIGNED)
                    )
                    if jval != VFALSE:
                        found = j
                        break
                if found >= 0:
                    tmp = cl_lits[base + w]
                    cl_lits[base + w] = cl_lits[found]
                    cl_lits[found] = tmp
                    newlit = np.int64(cl_lits[base + w])
                    nxt = wnext[cur]
                    if prev == -1:
                        head[q] = nxt
                    else:
                        wnext[prev] = nxt
                    wnext[cur] = head[newlit]
                    head[newlit] = cur
                    cur = nxt
                    continue
                if oval == VFALSE:
                    confl = c
                    break
                # unit: enqueue the other watch
                assigns[ov] = VTRUE if (olit & 1) == 0 else VFALSE
                level[ov] = cur_level
                reason[ov] = c
                trail[trail_sz] = np.int32(olit)
                trail_sz += 1
                prev = cur
                cur = wnext[cur]
            if confl >= 0:
                break

        if confl >= 0:
            conflicts += 1
            restart_left -= 1
            if cur_level == 0:
                status = np.int8(0)
                break
            if conflicts >= conflict_budget:
                status = np.int8(-1)
                break
            # ---- analyze: first unique implication point -------------------
            pathC = 0
            p = np.int64(-1)
            learnt_cnt = 1
            idx = trail_sz - 1
            while True:
                base = cl_start[confl]
                for j in range(base, base + cl_size[confl]):
                    qlit = np.int64(cl_lits[j])
                    if p != -1 and (qlit >> 1) == (p >> 1):
                        continue
                    v = qlit >> 1
                    if seen[v] == 0 and level[v] > 0:
                        seen[v] = 1
                        activity[v] += var_inc
                        if activity[v] > 1e100:
                            for u in range(n_vars):
                                activity[u] *= 1e-100
                            var_inc *= 1e-100
                        if level[v] >= cur_level:
                            pathC += 1
                        else:
                            learnt_buf[learnt_cnt] = np.int32(qlit)
                            learnt_cnt += 1
                while seen[trail[idx] >> 1] == 0:
                    idx -= 1
                p = np.int64(trail[idx])
                seen[p >> 1] = 0
                pathC -= 1
                idx -= 1
                if pathC <= 0:
                    break
                confl = reason[p >> 1]
            learnt_buf[0] = np.int32(p ^ 1)
            var_inc *= 1.0526315789473684  # 1 / 0.95 activity decay

            # minimize: drop tail literals whose negation is implied by the
            # rest of the clause (walking reason clauses, memoized via seen)
            n_clear = 0
            if learnt_cnt > 1:
                abstract = np.int64(0)
                for j in range(1, learnt_cnt):
                    abstract |= np.int64(1) << np.int64(level[learnt_buf[j] >> 1] & 31)
                    to_clear[n_clear] = np.int32(learnt_buf[j] >> 1)
                    n_clear += 1
                wj = 1
                for j in range(1, learnt_cnt):
                    lj = np.int64(learnt_buf[j])
                    vj = lj >> 1
                    redundant = False
                    if reason[vj] >= 0:
                        redundant = True
                        sp_m = 0
                        min_stack[0] = np.int32(lj)
                        sp_m = 1
                        mark = n_clear
                        while sp_m > 0:
                            sp_m -= 1
                            ql = np.int64(min_stack[sp_m])
                            rc = reason[ql >> 1]
                            rbase = cl_start[rc]
                            for jj in range(rbase, rbase + cl_size[rc]):
                                al = np.int64(cl_lits[jj])
                                av = al >> 1
                                if av == (ql >> 1):
                                    continue
                                if seen[av] != 0 or level[av] == 0:
                                    continue
                                if reason[av] >= 0 and (
                                    (np.int64(1) << np.int64(level[av] & 31)) & abstract
                                ) != 0:
                                    seen[av] = 1
                                    min_stack[sp_m] = np.int32(al)
                                    sp_m += 1
                                    to_clear[n_clear] = np.int32(av)
                                    n_clear += 1
                                else:
                                    for z in range(mark, n_clear):
                                        seen[to_clear[z]] = 0
                                    n_clear = mark
                                    redundant = False
                                    break
                            if not redundant:
                                break
                    if not redundant:
                        learnt_buf[wj] = np.int32(lj)
                        wj += 1
                learnt_cnt = wj

            # backjump level = highest level among the tail literals
            bt = 0
            if learnt_cnt > 1:
                jmax = 1
                for j in range(1, learnt_cnt):
                    if level[learnt_buf[j] >> 1] > level[learnt_buf[jmax] >> 1]:
                        jmax = j
                bt = level[learnt_buf[jmax] >> 1]
                tmp32 = learnt_buf[1]
                learnt_buf[1] = learnt_buf[jmax]
                learnt_buf[jmax] = tmp32
            for z in range(n_clear):
                seen[to_clear[z]] = 0
            seen[learnt_buf[0] >> 1] = 0

            # backtrack
            target = lim[bt]
            while trail_sz > target:
                trail_sz -= 1
                lt = np.int64(trail[trail_sz])
                v = lt >> 1
                saved[v] = np.int8((lt & 1) ^ 1)
                assigns[v] = UNASSIGNED
                reason[v] = -1
            qhead = trail_sz
            cur_level = bt

            uip = np.int64(learnt_buf[0])
            uv = uip >> 1
            if learnt_cnt == 1:
                assigns[uv] = VTRUE if (uip & 1) == 0 else VFALSE
                level[uv] = 0
                reason[uv] = -1
                trail[trail_sz] = np.int32(uip)
                trail_sz += 1
            else:
                # store the learnt clause, grow arenas as needed
                if top + learnt_cnt > cap_lits:
                    newcap = cap_lits * 2 + learnt_cnt
                    nl = np.empty(newcap, np.int32)
                    nl[:top] = cl_lits[:top]
                    cl_lits = nl
                    cap_lits = newcap
                if n_cl + 1 > cap_cl:
                    newcap = cap_cl * 2
                    ns = np.empty(newcap, np.int64)
                    ns[:n_cl] = cl_start[:n_cl]
                    cl_start = ns
                    nz = np.empty(newcap, np.int32)
                    nz[:n_cl] = cl_size[:n_cl]
                    cl_size = nz
                    nt = np.empty(newcap, np.int8)
                    nt[:n_cl] = cl_learnt[:n_cl]
                    cl_learnt = nt
                    nw = np.empty(2 * newcap, np.int64)
                    nw[: 2 * n_cl] = wnext[: 2 * n_cl]
                    wnext = nw
                    cap_cl = newcap
                cl_start[n_cl] = top
                cl_size[n_cl] = learnt_cnt
                cl_learnt[n_cl] = 1
                for j in range(learnt_cnt):
                    cl_lits[top + j] = learnt_buf[j]
                for slot in range(2):
                    lit = np.int64(cl_lits[top + slot])
                    node = 2 * n_cl + slot
                    wnext[node] = head[lit]
                    head[lit] = node
                top += learnt_cnt
                cid = n_cl
                n_cl += 1
                n_learnt_live += 1
                assigns[uv] = VTRUE if (uip & 1) == 0 else VFALSE
                level[uv] = cur_level
                reason[uv] = cid
                trail[trail_sz] = np.int32(uip)
                trail_sz += 1
            continue

        # ---- no conflict ---------------------------------------------------
        if trail_sz == n_vars:
            for v in range(n_vars):
                model[v] = 1 if assigns[v] == VTRUE else 0
            status = np.int8(1)
            break

        # restart?
        if restart_left <= 0 and cur_level > 0:
            # Luby(restart_seq) * 100 conflicts for the next interval
            x = restart_seq
            sz = 1
            sq = 0
            while sz < x + 1:
                sq += 1
                sz = 2 * sz + 1
            while sz - 1 != x:
                sz = (sz - 1) >> 1
                sq -= 1
                x = x % sz
            restart_left = np.int64(100) << sq
            restart_seq += 1
            target = lim[0]
            while trail_sz > target:
                trail_sz -= 1
                lt = np.int64(trail[trail_sz])
                v = lt >> 1
                saved[v] = np.int8((lt & 1) ^ 1)
                assigns[v] = UNASSIGNED
                reason[v] = -1
            qhead = trail_sz
            cur_level = 0

        # Reduce the learnt database.  Runs only at the root, where no reason
        # clause is ever dereferenced again (analysis skips level-0 vars), so
        # any learnt clause may be dropped; keep short ones and the newest
        # half of the rest.  Clauses satisfied at the root are removed and
        # root-false literals stripped, which keeps both watch slots on
        # unassigned literals after the rebuild.
        if cur_level == 0 and n_learnt_live >= 20000 + 5000 * n_reduce:
            n_reduce += 1
            keep = np.zeros(n_cl, np.int8)
            half = n_learnt_live // 2
            seen_learnt = 0
            for c in range(n_cl):
                if cl_learnt[c] == 0:
                    keep[c] = 1
                    continue
                seen_learnt += 1
                if cl_size[c] <= 3 or seen_learnt > n_learnt_live - half:
                    keep[c] = 1
            # compact the arena and remap clause ids
            remap = np.full(n_cl, -1, np.int64)
            new_top = np.int64(0)
            new_ncl = 0
            n_learnt_live = 0
            for c in range(n_cl):
                if keep[c] == 0:
                    continue
                base = cl_start[c]
                sz32 = cl_size[c]
                # drop clauses satisfied at level 0; strip false-at-0 literals
                sat0 = False
                for j in range(base, base + sz32):
                    jl = np.int64(cl_lits[j])
                    jv = jl >> 1
                    if assigns[jv] != UNASSIGNED:
                        val = assigns[jv] if (jl & 1) == 0 else (
                            VFALSE if assigns[jv] == VTRUE else VTRUE
                        )
                        if val == VTRUE:
                            sat0 = True
                            break
                if sat0:
                    continue
                wpos = new_top
                for j in range(base, base + sz32):
                    jl = cl_lits[j]
                    jv = np.int64(jl) >> 1
                    if assigns[jv] != UNASSIGNED:
                        continue  # false at root: drop the literal
                    cl_lits[wpos] = jl
                    wpos += 1
                cl_start[new_ncl] = new_top
                cl_size[new_ncl] = np.int32(wpos - new_top)
                cl_learnt[new_ncl] = cl_learnt[c]
                if cl_learnt[c] == 1:
                    n_learnt_live += 1
                remap[c] = new_ncl
                new_top = wpos
                new_ncl += 1
            for v in range(n_vars):
                if reason[v] >= 0:
                    reason[v] = remap[reason[v]]
            n_cl = new_ncl
            top = new_top
            # rebuild every watch list
            for L in range(2 * n_vars):
                head[L] = -1
            for c in range(n_cl):
                base = cl_start[c]
                for slot in range(2):
                    lit = np.int64(cl_lits[base + slot])
                    node = 2 * c + slot
                    wnext[node] = head[lit]
                    head[lit] = node

        # ---- decide --------------------------------------------------------
        bestv = -1
        besta = -1.0
        for v in range(n_vars):
            if assigns[v] == UNASSIGNED and activity[v] > besta:
                besta = activity[v]
                bestv = v
        lim[cur_level] = trail_sz
        cur_level += 1
        dlit = np.int64(2 * bestv + (1 if saved[bestv] == 0 else 0))
        dv = dlit >> 1
        assigns[dv] = VTRUE if (dlit & 1) == 0 else VFALSE
        level[dv] = cur_level
        reason[dv] = -1
        trail[trail_sz] = np.int32(dlit)
        trail_sz += 1

    return status, model, conflicts

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernel.

Mirrors ``_pycore`` operation for operation: same pruning, same branching
order, same outputs.  Masks are machine words here, so hosts are capped at
64 vertices (the exhaustive solvers stay far below that).
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memcpy

cdef extern from *:
    int __builtin_ctzll(unsigned long long)
    int __builtin_popcountll(unsigned long long)

BACKEND = "compiled"

ctypedef unsigned long long u64


cdef inline u64 _reach(u64* adj_a, u64* adj_b, u64 start):
    cdef u64 seen = start
    cdef u64 frontier = start
    cdef u64 nxt, f, low
    cdef int i
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & (~f + 1)
            f ^= low
            i = __builtin_ctzll(low)
            nxt |= adj_a[i] | adj_b[i]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


cdef inline bint _in_one_scc(u64* adj_out, u64* adj_in, u64* extra_out,
                             u64* extra_in, u64 pivot_bit, u64 targets):
    cdef u64 fwd = _reach(adj_out, extra_out, pivot_bit)
    if targets & ~fwd:
        return False
    cdef u64 bwd = _reach(adj_in, extra_in, pivot_bit)
    return not (targets & ~bwd)


# ---------------------------------------------------------------------------
# arc-disjoint search

cdef struct LamState:
    int n
    int m
    int ell
    u64 s_mask
    u64 pivot_bit
    int* asrc
    int* adst
    u64* und_out
    u64* und_in
    u64* cls_out     # (ell + 1) * n
    u64* cls_in
    u64* cls_verts   # ell + 1
    u64* zeros       # n zero words
    bint* complete
    int* label
    int used
    int done


cdef bint _lam_complete(LamState* st, int c):
    cdef u64 t = st.s_mask | st.cls_verts[c]
    return _in_one_scc(st.cls_out + c * st.n, st.cls_in + c * st.n,
                       st.zeros, st.zeros, st.pivot_bit, t)


cdef bint _lam_feasible(LamState* st, int c):
    cdef u64 t = st.s_mask | st.cls_verts[c]
    return _in_one_scc(st.cls_out + c * st.n, st.cls_in + c * st.n,
                       st.und_out, st.und_in, st.pivot_bit, t)


cdef bint _lam_all_feasible(LamState* st):
    cdef int c
    for c in range(1, st.ell + 1):
        if not st.complete[c] and not _lam_feasible(st, c):
            return False
    return True


cdef bint _lam_degree_ok(LamState* st, int v):
    cdef int need_out = 0, need_in = 0, c
    cdef u64 vbit = (<u64>1) << v
    for c in range(1, st.ell + 1):
        if st.complete[c]:
            continue
        if (st.s_mask | st.cls_verts[c]) & vbit:
            if not st.cls_out[c * st.n + v]:
                need_out += 1
            if not st.cls_in[c * st.n + v]:
                need_in += 1
    return (need_out <= __builtin_popcountll(st.und_out[v])
            and need_in <= __builtin_popcountll(st.und_in[v]))


cdef bint _lam_solve(LamState* st, int idx):
    cdef int i, c, u, v
    cdef u64 ubit, vbit, old_verts
    cdef bint opened, finished
    if st.done == st.ell:
        for i in range(idx, st.m):
            st.label[i] = 0
        return True
    if idx == st.m:
        return False
    u = st.asrc[idx]
    v = st.adst[idx]
    ubit = (<u64>1) << u
    vbit = (<u64>1) << v
    st.und_out[u] &= ~vbit
    st.und_in[v] &= ~ubit

    cdef int cap = st.used + 1
    if cap > st.ell:
        cap = st.ell
    for c in range(1, cap + 1):
        if st.complete[c]:
            continue
        opened = st.cls_verts[c] == 0
        old_verts = st.cls_verts[c]
        st.cls_out[c * st.n + u] |= vbit
        st.cls_in[c * st.n + v] |= ubit
        st.cls_verts[c] |= ubit | vbit
        if opened:
            st.used += 1
        finished = _lam_complete(st, c)
        if finished:
            st.complete[c] = True
            st.done += 1
        st.label[idx] = c
        if (_lam_degree_ok(st, u) and _lam_degree_ok(st, v)
                and _lam_all_feasible(st) and _lam_solve(st, idx + 1)):
            return True
        if finished:
            st.complete[c] = False
            st.done -= 1
        if opened:
            st.used -= 1
        st.cls_out[c * st.n + u] &= ~vbit
        st.cls_in[c * st.n + v] &= ~ubit
        st.cls_verts[c] = old_verts
    st.label[idx] = 0
    if (_lam_degree_ok(st, u) and _lam_degree_ok(st, v)
            and _lam_all_feasible(st) and _lam_solve(st, idx + 1)):
        return True
    st.und_out[u] |= vbit
    st.und_in[v] |= ubit
    return False


def search_arc_disjoint(n, arcs, s_mask, ell):
    """Same contract as the pure kernel: ell lists of arc indices or None."""
    cdef int cn = n, cell = ell, m = len(arcs)
    cdef u64 smask = s_mask
    if cn > 64:
        raise ValueError("kernel limited to 64 vertices")
    cdef LamState st
    st.n = cn
    st.m = m
    st.ell = cell
    st.s_mask = smask
    st.pivot_bit = smask & (~smask + 1)
    st.used = 0
    st.done = 0
    st.asrc = <int*>calloc(max(m, 1), sizeof(int))
    st.adst = <int*>calloc(max(m, 1), sizeof(int))
    st.und_out = <u64*>calloc(cn, sizeof(u64))
    st.und_in = <u64*>calloc(cn, sizeof(u64))
    st.cls_out = <u64*>calloc((cell + 1) * cn, sizeof(u64))
    st.cls_in = <u64*>calloc((cell + 1) * cn, sizeof(u64))
    st.cls_verts = <u64*>calloc(cell + 1, sizeof(u64))
    st.zeros = <u64*>calloc(cn, sizeof(u64))
    st.complete = <bint*>calloc(cell + 1, sizeof(bint))
    st.label = <int*>calloc(max(m, 1), sizeof(int))
    cdef int i, u, v
    cdef u64 s
    cdef bint ok
    try:
        for i, (u, v) in enumerate(arcs):
            st.asrc[i] = u
            st.adst[i] = v
            st.und_out[u] |= (<u64>1) << v
            st.und_in[v] |= (<u64>1) << u
        ok = True
        s = smask
        while s:
            v = __builtin_ctzll(s)
            s &= s - 1
            if not _lam_degree_ok(&st, v):
                ok = False
                break
        if ok and not _lam_all_feasible(&st):
            ok = False
        if ok:
            ok = _lam_solve(&st, 0)
        if not ok:
            return None
        parts = [[] for _ in range(cell)]
        for i in range(m):
            if st.label[i]:
                parts[st.label[i] - 1].append(i)
        return parts
    finally:
        free(st.asrc); free(st.adst); free(st.und_out); free(st.und_in)
        free(st.cls_out); free(st.cls_in); free(st.cls_verts); free(st.zeros)
        free(st.complete); free(st.label)


# ---------------------------------------------------------------------------
# internally disjoint search

cdef struct KapState:
    int n
    int ell
    int nfree
    int nss
    int nvars
    u64 s_mask
    u64 pivot_bit
    u64 unassigned
    u64* base_out
    u64* base_in
    u64* cls_vmask     # ell + 1
    u64* zeros
    int* free_verts
    int* ss_u
    int* ss_v
    int* ss_label      # -1 unassigned, 0 unused, 1..ell
    bint* complete
    int used
    int done


cdef void _kap_build(KapState* st, int c, bint potential, u64* out, u64* inn):
    cdef u64 allowed = st.s_mask | st.cls_vmask[c]
    if potential:
        allowed |= st.unassigned
    cdef u64 a = allowed, low
    cdef int u, k, lab
    for u in range(st.n):
        out[u] = 0
        inn[u] = 0
    a = allowed
    while a:
        low = a & (~a + 1)
        a ^= low
        u = __builtin_ctzll(low)
        out[u] = st.base_out[u] & allowed
        inn[u] = st.base_in[u] & allowed
    for k in range(st.nss):
        lab = st.ss_label[k]
        if lab == c or (potential and lab == -1):
            out[st.ss_u[k]] |= (<u64>1) << st.ss_v[k]
            inn[st.ss_v[k]] |= (<u64>1) << st.ss_u[k]


cdef bint _kap_complete(KapState* st, int c):
    cdef u64 out[64]
    cdef u64 inn[64]
    _kap_build(st, c, False, out, inn)
    cdef u64 t = st.s_mask | st.cls_vmask[c]
    return _in_one_scc(out, inn, st.zeros, st.zeros, st.pivot_bit, t)


cdef bint _kap_feasible(KapState* st, int c):
    cdef u64 out[64]
    cdef u64 inn[64]
    _kap_build(st, c, True, out, inn)
    cdef u64 t = st.s_mask | st.cls_vmask[c]
    return _in_one_scc(out, inn, st.zeros, st.zeros, st.pivot_bit, t)


cdef bint _kap_all_feasible(KapState* st):
    cdef int c
    for c in range(1, st.ell + 1):
        if not st.complete[c] and not _kap_feasible(st, c):
            return False
    return True


cdef bint _kap_class_used_ss(KapState* st, int c):
    cdef int k
    for k in range(st.nss):
        if st.ss_label[k] == c:
            return True
    return False


cdef void _kap_assign(KapState* st, int pos, int value):
    cdef int v
    if pos < st.nfree:
        v = st.free_verts[pos]
        st.unassigned &= ~((<u64>1) << v)
        if value > 0:
            st.cls_vmask[value] |= (<u64>1) << v
    else:
        st.ss_label[pos - st.nfree] = value


cdef void _kap_unassign(KapState* st, int pos, int value):
    cdef int v
    if pos < st.nfree:
        v = st.free_verts[pos]
        st.unassigned |= (<u64>1) << v
        if value > 0:
            st.cls_vmask[value] &= ~((<u64>1) << v)
    else:
        st.ss_label[pos - st.nfree] = -1


cdef bint _kap_solve(KapState* st, int pos):
    cdef int c
    cdef bint opened, finished
    if st.done == st.ell:
        return True
    if pos == st.nvars:
        return False
    cdef int cap = st.used + 1
    if cap > st.ell:
        cap = st.ell
    for c in range(1, cap + 1):
        if st.complete[c]:
            continue
        opened = st.cls_vmask[c] == 0 and not _kap_class_used_ss(st, c)
        _kap_assign(st, pos, c)
        if opened:
            st.used += 1
        finished = _kap_complete(st, c)
        if finished:
            st.complete[c] = True
            st.done += 1
        if _kap_all_feasible(st):
            if st.done == st.ell or _kap_solve(st, pos + 1):
                return True
        if finished:
            st.complete[c] = False
            st.done -= 1
        if opened:
            st.used -= 1
        _kap_unassign(st, pos, c)
    _kap_assign(st, pos, 0)
    if _kap_all_feasible(st) and _kap_solve(st, pos + 1):
        return True
    _kap_unassign(st, pos, 0)
    return False


def search_internally_disjoint(n, arcs, s_mask, ell):
    """Same contract as the pure kernel: ell lists of arc indices or None."""
    cdef int cn = n, cell = ell, m = len(arcs)
    cdef u64 smask = s_mask
    if cn > 64:
        raise ValueError("kernel limited to 64 vertices")
    cdef KapState st
    st.n = cn
    st.ell = cell
    st.s_mask = smask
    st.pivot_bit = smask & (~smask + 1)
    st.used = 0
    st.done = 0
    st.unassigned = 0
    st.base_out = <u64*>calloc(cn, sizeof(u64))
    st.base_in = <u64*>calloc(cn, sizeof(u64))
    st.cls_vmask = <u64*>calloc(cell + 1, sizeof(u64))
    st.zeros = <u64*>calloc(cn, sizeof(u64))
    st.free_verts = <int*>calloc(cn, sizeof(int))
    st.ss_u = <int*>calloc(max(m, 1), sizeof(int))
    st.ss_v = <int*>calloc(max(m, 1), sizeof(int))
    st.ss_label = <int*>calloc(max(m, 1), sizeof(int))
    st.complete = <bint*>calloc(cell + 1, sizeof(bint))
    cdef int i, u, v, k
    cdef u64 allowed
    ss_indices = []
    try:
        st.nss = 0
        for i, (u, v) in enumerate(arcs):
            if (smask >> u & 1) and (smask >> v & 1):
                st.ss_u[st.nss] = u
                st.ss_v[st.nss] = v
                st.ss_label[st.nss] = -1
                st.nss += 1
                ss_indices.append(i)
            else:
                st.base_out[u] |= (<u64>1) << v
                st.base_in[v] |= (<u64>1) << u
        st.nfree = 0
        for v in range(cn):
            if not (smask >> v & 1):
                st.free_verts[st.nfree] = v
                st.nfree += 1
                st.unassigned |= (<u64>1) << v
        st.nvars = st.nfree + st.nss

        if not _kap_all_feasible(&st):
            return None
        if not _kap_solve(&st, 0):
            return None

        ss_set = set(ss_indices)
        parts = []
        for c in range(1, cell + 1):
            allowed = smask | st.cls_vmask[c]
            chosen = []
            for i, (u, v) in enumerate(arcs):
                if i in ss_set:
                    continue
                if (allowed >> u & 1) and (allowed >> v & 1):
                    chosen.append(i)
            for k in range(st.nss):
                if st.ss_label[k] == c:
                    chosen.append(ss_indices[k])
            parts.append(sorted(chosen))
        return parts
    finally:
        free(st.base_out); free(st.base_in); free(st.cls_vmask); free(st.zeros)
        free(st.free_verts); free(st.ss_u); free(st.ss_v); free(st.ss_label)
        free(st.complete)

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contract as ``_pykernels``."""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t

BACKEND = "cython"

cdef enum:
    MAXV = 16
    MAXE = 64


cdef inline int _find(int* parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef int64_t _genus(int nv, int mask, const int64_t* w, int ne,
                    const int* eu, const int* ev) noexcept nogil:
    cdef int parent[MAXV]
    cdef int x, i, ru, rv, internal = 0, comps = 0, size = 0
    cdef int64_t wsum = 0
    for x in range(nv):
        parent[x] = x
    for i in range(ne):
        if (mask >> eu[i]) & 1 and (mask >> ev[i]) & 1:
            internal += 1
            ru = _find(parent, eu[i])
            rv = _find(parent, ev[i])
            if ru != rv:
                parent[ru] = rv
    for x in range(nv):
        if (mask >> x) & 1:
            size += 1
            wsum += w[x]
            if _find(parent, x) == x:
                comps += 1
    return wsum + internal - size + comps


cdef inline int _popcount(int m) noexcept nogil:
    cdef int c = 0
    while m:
        m &= m - 1
        c += 1
    return c


cdef int _load(int nv, weights, eu, ev, int64_t* w, int* cu, int* cv) except -1:
    cdef int i, ne = len(eu)
    if nv > MAXV or ne > MAXE:
        raise OverflowError("graph too large for compiled kernel")
    for i in range(nv):
        w[i] = weights[i]
    for i in range(ne):
        cu[i] = eu[i]
        cv[i] = ev[i]
    return ne


def subset_genera(int nv, weights, eu, ev):
    cdef int64_t w[MAXV]
    cdef int cu[MAXE]
    cdef int cv[MAXE]
    cdef int ne = _load(nv, weights, eu, ev, w, cu, cv)
    cdef int mask, full = 1 << nv
    out = [0] * full
    for mask in range(1, full):
        out[mask] = _genus(nv, mask, w, ne, cu, cv)
    return out


def max_weak_mask(int nv, weights, eu, ev, thresholds):
    cdef int64_t w[MAXV]
    cdef int64_t th[MAXV + 1]
    cdef int cu[MAXE]
    cdef int cv[MAXE]
    cdef int ne = _load(nv, weights, eu, ev, w, cu, cv)
    cdef int size, mask, full = 1 << nv
    for size in range(nv + 1):
        th[size] = thresholds[size]
    for size in range(nv, 0, -1):
        for mask in range(1, full):
            if _popcount(mask) != size:
                continue
            if _genus(nv, mask, w, ne, cu, cv) <= th[nv - size]:
                return mask
    return 0


def union_closure_violation(int nv, genera, thresholds):
    cdef int full = 1 << nv
    cdef int64_t th[MAXV + 1]
    cdef int64_t* g = <int64_t*> malloc(full * sizeof(int64_t))
    cdef int* weak = <int*> malloc(full * sizeof(int))
    cdef int i, j, a, b, u, nweak = 0
    if nv > MAXV:
        raise OverflowError("graph too large for compiled kernel")
    try:
        for i in range(nv + 1):
            th[i] = thresholds[i]
        for i in range(full):
            g[i] = genera[i]
            if g[i] <= th[nv - _popcount(i)]:
                weak[nweak] = i
                nweak += 1
        for i in range(nweak):
            a = weak[i]
            for j in range(i + 1, nweak):
                b = weak[j]
                u = a | b
                if g[u] > th[nv - _popcount(u)]:
                    return (a, b)
        return None
    finally:
        free(g)
        free(weak)


def genus_union_bound_violation(int nv, genera, int64_t bound):
    cdef int full = 1 << nv
    cdef int64_t* g = <int64_t*> malloc(full * sizeof(int64_t))
    cdef int a, b
    if nv > MAXV:
        raise OverflowError("graph too large for compiled kernel")
    try:
        for a in range(full):
            g[a] = genera[a]
        for a in range(full):
            for b in range(a + 1, full):
                if g[a | b] > g[a] + g[b] + bound:
                    return (a, b)
        return None
    finally:
        free(g)


cdef struct CanonState:
    int nv
    int codelen
    int have_best
    int* adj
    int* vblock
    int* posblock
    int* perm
    int* used
    int* cur
    int* best
    int* best_perm


cdef int _canon_rec(CanonState* s, int j, int base, int state) noexcept nogil:
    cdef int v, i, c, nstate, updated = 0, nv = s.nv
    if j == nv:
        if state < 0 or not s.have_best:
            for i in range(s.codelen):
                s.best[i] = s.cur[i]
            for i in range(nv):
                s.best_perm[i] = s.perm[i]
            s.have_best = 1
            return 1
        return 0
    for v in range(nv):
        if s.used[v] or s.vblock[v] != s.posblock[j]:
            continue
        s.perm[j] = v
        for i in range(j + 1):
            s.cur[base + i] = s.adj[s.perm[i] * nv + v]
        nstate = state
        if state == 0 and s.have_best:
            c = 0
            for i in range(j + 1):
                if s.cur[base + i] != s.best[base + i]:
                    c = 1 if s.cur[base + i] > s.best[base + i] else -1
                    break
            if c > 0:
                continue
            if c < 0:
                nstate = -1
        s.used[v] = 1
        if _canon_rec(s, j + 1, base + j + 1, nstate):
            state = 0
            updated = 1
        s.used[v] = 0
    return updated


def canonical_permutation(int nv, adj, vblock, posblock):
    cdef CanonState s
    cdef int i
    cdef int codelen = nv * (nv + 1) // 2
    if nv > MAXV:
        raise OverflowError("graph too large for compiled kernel")
    s.nv = nv
    s.codelen = codelen
    s.have_best = 0
    s.adj = <int*> malloc((nv * nv + 1) * sizeof(int))
    s.vblock = <int*> malloc((nv + 1) * sizeof(int))
    s.posblock = <int*> malloc((nv + 1) * sizeof(int))
    s.perm = <int*> malloc((nv + 1) * sizeof(int))
    s.used = <int*> malloc((nv + 1) * sizeof(int))
    s.cur = <int*> malloc((codelen + 1) * sizeof(int))
    s.best = <int*> malloc((codelen + 1) * sizeof(int))
    s.best_perm = <int*> malloc((nv + 1) * sizeof(int))
    try:
        for i in range(nv * nv):
            s.adj[i] = adj[i]
        for i in range(nv):
            s.vblock[i] = vblock[i]
            s.posblock[i] = posblock[i]
            s.used[i] = 0
        with nogil:
            _canon_rec(&s, 0, 0, -1)
        if not s.have_best:
            return None
        return [s.best_perm[i] for i in range(nv)]
    finally:
        free(s.adj)
        free(s.vblock)
        free(s.posblock)
        free(s.perm)
        free(s.used)
        free(s.cur)
        free(s.best)
        free(s.best_perm)

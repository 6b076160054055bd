# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; semantics (branch order, node counts, symmetry
breaking) match the pure-Python fallback in _core_py exactly."""

from time import monotonic

from libc.stdlib cimport calloc, free

YES, NO, UNKNOWN = 1, 0, -1

cdef long _CHECK_EVERY = 65536


cdef struct SearchState:
    int n
    int* nbr_flat
    int* nbr_ptr
    int* pos
    int* vert
    int* pending
    long nodes
    long max_nodes
    double deadline
    int out_of_budget
    # decide_bandwidth
    int b
    # min_long_edges_search
    int t
    int best
    int* witness
    int has_witness


cdef int _budget_hit(SearchState* st) noexcept:
    if st.nodes > st.max_nodes:
        return 1
    if st.deadline > 0 and st.nodes % _CHECK_EVERY == 0:
        if monotonic() > st.deadline:
            return 1
    return 0


cdef int _decide_rec(SearchState* st, int p) noexcept:
    cdef int q, w, u, i, forced, res, ok
    cdef int n = st.n, b = st.b
    if p == n:
        st.has_witness = 1
        for u in range(n):
            st.witness[u] = st.pos[u]
        return YES
    q = p - b
    forced = -1
    if q >= 0:
        w = st.vert[q]
        if st.pending[w] >= 2:
            return NO
        if st.pending[w] == 1:
            for i in range(st.nbr_ptr[w], st.nbr_ptr[w + 1]):
                if st.pos[st.nbr_flat[i]] < 0:
                    forced = st.nbr_flat[i]
                    break
    for u in range(n):
        if forced >= 0 and u != forced:
            continue
        if st.pos[u] >= 0:
            continue
        if p == n - 1 and n >= 2 and u < st.vert[0]:
            continue
        if st.pending[u] > b:
            continue
        ok = 1
        for i in range(st.nbr_ptr[u], st.nbr_ptr[u + 1]):
            w = st.nbr_flat[i]
            if st.pos[w] >= 0 and p - st.pos[w] > b:
                ok = 0
                break
        if not ok:
            continue
        st.nodes += 1
        if _budget_hit(st):
            st.out_of_budget = 1
            return UNKNOWN
        st.pos[u] = p
        st.vert[p] = u
        for i in range(st.nbr_ptr[u], st.nbr_ptr[u + 1]):
            st.pending[st.nbr_flat[i]] -= 1
        res = _decide_rec(st, p + 1)
        st.pos[u] = -1
        st.vert[p] = -1
        for i in range(st.nbr_ptr[u], st.nbr_ptr[u + 1]):
            st.pending[st.nbr_flat[i]] += 1
        if res != NO:
            return res
    return NO


def decide_bandwidth(int n, int[::1] nbr_flat, int[::1] nbr_ptr, int b,
                     long max_nodes, double deadline=0.0):
    cdef SearchState st
    cdef int v, res
    st.n = n
    st.nbr_flat = &nbr_flat[0] if nbr_flat.shape[0] else NULL
    st.nbr_ptr = &nbr_ptr[0]
    st.pos = <int*> calloc(n, sizeof(int))
    st.vert = <int*> calloc(n, sizeof(int))
    st.pending = <int*> calloc(n, sizeof(int))
    st.witness = <int*> calloc(n, sizeof(int))
    st.nodes = 0
    st.max_nodes = max_nodes
    st.deadline = deadline
    st.out_of_budget = 0
    st.b = b
    st.has_witness = 0
    for v in range(n):
        st.pos[v] = -1
        st.vert[v] = -1
        st.pending[v] = nbr_ptr[v + 1] - nbr_ptr[v]
    try:
        res = _decide_rec(&st, 0)
        if res == YES:
            return YES, st.nodes, [st.witness[v] for v in range(n)]
        return (UNKNOWN if st.out_of_budget else NO), st.nodes, None
    finally:
        free(st.pos)
        free(st.vert)
        free(st.pending)
        free(st.witness)


cdef int _minlong_rec(SearchState* st, int p, int committed) noexcept:
    cdef int q, w, u, i, c, cap, grown, bound
    cdef int n = st.n, t = st.t
    if p == n:
        if committed < st.best:
            st.best = committed
            st.has_witness = 1
            for u in range(n):
                st.witness[u] = st.pos[u]
        return 1
    bound = committed
    for q in range(p):
        c = st.pending[st.vert[q]]
        if c:
            cap = q + t - p + 1  # remaining positions that keep w's edges short
            if cap < 0:
                cap = 0
            if cap < c:
                bound += c - cap
                if bound >= st.best:
                    return 1
    for u in range(n):
        if st.pos[u] >= 0:
            continue
        if p == n - 1 and n >= 2 and u < st.vert[0]:
            continue
        grown = committed
        for i in range(st.nbr_ptr[u], st.nbr_ptr[u + 1]):
            w = st.nbr_flat[i]
            if st.pos[w] >= 0 and p - st.pos[w] > t:
                grown += 1
        if grown >= st.best:
            continue
        st.nodes += 1
        if _budget_hit(st):
            st.out_of_budget = 1
            return 0
        st.pos[u] = p
        st.vert[p] = u
        for i in range(st.nbr_ptr[u], st.nbr_ptr[u + 1]):
            st.pending[st.nbr_flat[i]] -= 1
        c = _minlong_rec(st, p + 1, grown)
        st.pos[u] = -1
        st.vert[p] = -1
        for i in range(st.nbr_ptr[u], st.nbr_ptr[u + 1]):
            st.pending[st.nbr_flat[i]] += 1
        if not c:
            return 0
    return 1


def min_long_edges_search(int n, int[::1] nbr_flat, int[::1] nbr_ptr, int t,
                          int best_init, long max_nodes, double deadline=0.0):
    cdef SearchState st
    cdef int v, finished
    st.n = n
    st.nbr_flat = &nbr_flat[0] if nbr_flat.shape[0] else NULL
    st.nbr_ptr = &nbr_ptr[0]
    st.pos = <int*> calloc(n, sizeof(int))
    st.vert = <int*> calloc(n, sizeof(int))
    st.pending = <int*> calloc(n, sizeof(int))
    st.witness = <int*> calloc(n, sizeof(int))
    st.nodes = 0
    st.max_nodes = max_nodes
    st.deadline = deadline
    st.out_of_budget = 0
    st.t = t
    st.best = best_init
    st.has_witness = 0
    for v in range(n):
        st.pos[v] = -1
        st.vert[v] = -1
        st.pending[v] = nbr_ptr[v + 1] - nbr_ptr[v]
    try:
        finished = _minlong_rec(&st, 0, 0)
        proven = bool(finished and not st.out_of_budget)
        witness = [st.witness[v] for v in range(n)] if st.has_witness else None
        return st.best, proven, st.nodes, witness
    finally:
        free(st.pos)
        free(st.vert)
        free(st.pending)
        free(st.witness)


def vi_table(int n, masks):
    """Subset DP over all 2^n vertex subsets; returns the f table as a bytearray."""
    cdef long size = 1 << n
    cdef long full = size - 1
    cdef long s, m, outside, low
    cdef int v, boundary, best, val
    cdef long* cmasks = <long*> calloc(n, sizeof(long))
    cdef unsigned char* f = <unsigned char*> calloc(size, sizeof(unsigned char))
    for v in range(n):
        cmasks[v] = masks[v]
    try:
        for s in range(1, size):
            outside = full & ~s
            boundary = 0
            m = s
            while m:
                v = 0
                low = m & -m
                while not (low >> v) & 1:
                    v += 1
                if cmasks[v] & outside:
                    boundary += 1
                m &= m - 1
            best = 255
            m = s
            while m:
                low = m & -m
                val = f[s ^ low]
                if val < best:
                    best = val
                m &= m - 1
            f[s] = boundary if boundary > best else best
        return bytearray(<unsigned char[:size]> f)
    finally:
        free(cmasks)
        free(f)

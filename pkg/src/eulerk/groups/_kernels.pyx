# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels. Mirrors ``_kernels_py`` call for call."""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memcpy

cnp.import_array()

cdef enum:
    MODE_ALL = 0
    MODE_INJECTIVE = 1
    MODE_FIRST_INJECTIVE = 2
    MODE_COUNT = 3
    MODE_COUNT_INJECTIVE = 4


cdef struct HomSearch:
    int n
    int m
    int k
    int mode
    const int* s
    const int* t
    const int* gens
    const int* cand
    const int* counts
    int cand_stride
    int* images
    int* phi       # k levels of n entries
    int* queue
    const int* inv
    long count
    int* out
    Py_ssize_t out_len
    Py_ssize_t out_cap
    int failed


cdef int _extend(HomSearch* st, int level) nogil:
    cdef int n = st.n
    cdef int* phi = st.phi + level * n
    cdef int i, x, y, z, head = 0, tail = 1
    for i in range(n):
        phi[i] = -1
    phi[0] = 0
    st.queue[0] = 0
    while head < tail:
        x = st.queue[head]
        head += 1
        for i in range(level + 1):
            y = st.s[x * n + st.gens[i]]
            z = st.t[phi[x] * st.m + st.images[i]]
            if phi[y] < 0:
                phi[y] = z
                st.queue[tail] = y
                tail += 1
            elif phi[y] != z:
                return 0
    return 1


cdef int _emit(HomSearch* st, int* phi) nogil:
    cdef Py_ssize_t newcap
    cdef int* buf
    if st.out_len + st.n > st.out_cap:
        newcap = 2 * st.out_cap + st.n * 64
        buf = <int*> realloc(st.out, newcap * sizeof(int))
        if buf == NULL:
            st.failed = 1
            return 0
        st.out = buf
        st.out_cap = newcap
    memcpy(st.out + st.out_len, phi, st.n * sizeof(int))
    st.out_len += st.n
    return 1


cdef int _prefix_minimal(HomSearch* st, int level) nogil:
    # images[0..level] is least among its conjugates
    cdef int h, j, x, c, m = st.m
    for h in range(1, m):
        for j in range(level + 1):
            x = st.images[j]
            c = st.t[st.t[h * m + x] * m + st.inv[h]]
            if c != x:
                if c < x:
                    return 0
                break
    return 1


cdef int _rec(HomSearch* st, int level) nogil:
    # returns 1 to stop the whole search
    cdef int c, x, injective
    cdef int* phi = st.phi + level * st.n
    for c in range(st.counts[level]):
        st.images[level] = st.cand[level * st.cand_stride + c]
        if not _extend(st, level):
            continue
        if st.mode >= MODE_COUNT and not _prefix_minimal(st, level):
            continue
        if level + 1 < st.k:
            if _rec(st, level + 1):
                return 1
            continue
        if st.mode != MODE_ALL and st.mode != MODE_COUNT:
            injective = 1
            for x in range(1, st.n):
                if phi[x] == 0:
                    injective = 0
                    break
            if not injective:
                continue
        if st.mode >= MODE_COUNT:
            st.count += 1
            continue
        if not _emit(st, phi):
            return 1
        if st.mode == MODE_FIRST_INJECTIVE:
            return 1
    return 0


def search_homs(src, gens, tgt, cand, counts, int mode):
    cdef cnp.ndarray[cnp.int32_t, ndim=2, mode="c"] s = np.ascontiguousarray(src, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=2, mode="c"] t = np.ascontiguousarray(tgt, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1, mode="c"] g = np.ascontiguousarray(gens, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=2, mode="c"] cd = np.ascontiguousarray(cand, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1, mode="c"] ct = np.ascontiguousarray(counts, dtype=np.int32)
    cdef HomSearch st
    cdef int n = s.shape[0]
    st.n = n
    st.m = t.shape[0]
    st.k = g.shape[0]
    st.mode = mode
    st.s = <const int*> s.data
    st.t = <const int*> t.data
    st.gens = <const int*> g.data
    st.cand = <const int*> cd.data
    st.counts = <const int*> ct.data
    st.cand_stride = cd.shape[1] if cd.ndim == 2 else 0
    st.inv = NULL
    st.count = 0
    st.out = NULL
    st.out_len = 0
    st.out_cap = 0
    st.failed = 0
    if st.k == 0:
        return np.zeros((1, n), dtype=np.int32)
    st.images = <int*> malloc(st.k * sizeof(int))
    st.phi = <int*> malloc(st.k * n * sizeof(int))
    st.queue = <int*> malloc(n * sizeof(int))
    if st.images == NULL or st.phi == NULL or st.queue == NULL:
        free(st.images); free(st.phi); free(st.queue)
        raise MemoryError()
    try:
        with nogil:
            _rec(&st, 0)
        if st.failed:
            raise MemoryError()
        rows = st.out_len // n
        result = np.empty((rows, n), dtype=np.int32)
        if rows:
            memcpy(cnp.PyArray_DATA(result), st.out, st.out_len * sizeof(int))
        return result
    finally:
        free(st.images)
        free(st.phi)
        free(st.queue)
        free(st.out)


def count_reps(src, gens, tgt, inv, cand, counts, bint injective):
    cdef cnp.ndarray[cnp.int32_t, ndim=2, mode="c"] s = np.ascontiguousarray(src, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=2, mode="c"] t = np.ascontiguousarray(tgt, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1, mode="c"] g = np.ascontiguousarray(gens, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1, mode="c"] iv = np.ascontiguousarray(inv, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=2, mode="c"] cd = np.ascontiguousarray(cand, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1, mode="c"] ct = np.ascontiguousarray(counts, dtype=np.int32)
    cdef HomSearch st
    cdef int n = s.shape[0]
    st.n = n
    st.m = t.shape[0]
    st.k = g.shape[0]
    st.mode = MODE_COUNT_INJECTIVE if injective else MODE_COUNT
    st.s = <const int*> s.data
    st.t = <const int*> t.data
    st.gens = <const int*> g.data
    st.inv = <const int*> iv.data
    st.cand = <const int*> cd.data
    st.counts = <const int*> ct.data
    st.cand_stride = cd.shape[1] if cd.ndim == 2 else 0
    st.out = NULL
    st.out_len = 0
    st.out_cap = 0
    st.count = 0
    st.failed = 0
    if st.k == 0:
        return 1 if (n == 1 or not injective) else 0
    st.images = <int*> malloc(st.k * sizeof(int))
    st.phi = <int*> malloc(st.k * n * sizeof(int))
    st.queue = <int*> malloc(n * sizeof(int))
    if st.images == NULL or st.phi == NULL or st.queue == NULL:
        free(st.images); free(st.phi); free(st.queue)
        raise MemoryError()
    try:
        with nogil:
            _rec(&st, 0)
        return st.count
    finally:
        free(st.images)
        free(st.phi)
        free(st.queue)


def count_conj_orbits(rows, tgt, inv):
    cdef cnp.ndarray[cnp.int32_t, ndim=2, mode="c"] r = np.ascontiguousarray(rows, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=2, mode="c"] t = np.ascontiguousarray(tgt, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1, mode="c"] iv = np.ascontiguousarray(inv, dtype=np.int32)
    cdef Py_ssize_t nrows = r.shape[0], i
    cdef int k = r.shape[1] if r.ndim == 2 else 0
    cdef int m = t.shape[0]
    cdef int h, j, x, c, minimal
    cdef long count = 0
    cdef const int* rp = <const int*> r.data
    cdef const int* tp = <const int*> t.data
    cdef const int* ip = <const int*> iv.data
    with nogil:
        for i in range(nrows):
            minimal = 1
            for h in range(1, m):
                for j in range(k):
                    x = rp[i * k + j]
                    c = tp[tp[h * m + x] * m + ip[h]]
                    if c != x:
                        if c < x:
                            minimal = 0
                        break
                if not minimal:
                    break
            count += minimal
    return count


cdef struct Canon:
    int n
    int d
    const int* t
    const int* cand
    const int* counts
    int stride
    int* gens
    int* seen      # d levels of n flags
    int* queue     # d levels of n entries
    int* qlen
    int* label
    int* best
    int have_best


cdef int _span(Canon* st, int level) nogil:
    cdef int n = st.n
    cdef int* seen = st.seen + level * n
    cdef int* queue = st.queue + level * n
    cdef int i, x, y, head = 0, tail = 1
    for i in range(n):
        seen[i] = 0
    seen[0] = 1
    queue[0] = 0
    while head < tail:
        x = queue[head]
        head += 1
        for i in range(level + 1):
            y = st.t[x * n + st.gens[i]]
            if not seen[y]:
                seen[y] = 1
                queue[tail] = y
                tail += 1
    st.qlen[level] = tail
    return tail


cdef void _relabel_compare(Canon* st, int* order) nogil:
    cdef int n = st.n
    cdef int a, b, v, pos, state = 0   # 0 undecided, 1 smaller
    for a in range(n):
        st.label[order[a]] = a
    if not st.have_best:
        state = 1
    pos = 0
    for a in range(n):
        for b in range(n):
            v = st.label[st.t[order[a] * n + order[b]]]
            if state == 0:
                if v > st.best[pos]:
                    return
                if v < st.best[pos]:
                    state = 1
            if state == 1:
                st.best[pos] = v
            pos += 1
    st.have_best = 1


cdef void _canon_rec(Canon* st, int level) nogil:
    cdef int c, g, n = st.n
    cdef int* prev
    for c in range(st.counts[level]):
        g = st.cand[level * st.stride + c]
        if level == 0:
            if g == 0:
                continue
        else:
            prev = st.seen + (level - 1) * n
            if prev[g]:
                continue
        st.gens[level] = g
        _span(st, level)
        if level + 1 < st.d:
            _canon_rec(st, level + 1)
        elif st.qlen[level] == n:
            _relabel_compare(st, st.queue + level * n)


def canonical_table(tab, cand, counts):
    cdef cnp.ndarray[cnp.int32_t, ndim=2, mode="c"] t = np.ascontiguousarray(tab, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=2, mode="c"] cd = np.ascontiguousarray(cand, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1, mode="c"] ct = np.ascontiguousarray(counts, dtype=np.int32)
    cdef Canon st
    cdef int n = t.shape[0]
    cdef int d = ct.shape[0]
    cdef int i
    if d == 0:
        return [0] if n == 1 else None
    st.n = n
    st.d = d
    st.t = <const int*> t.data
    st.cand = <const int*> cd.data
    st.counts = <const int*> ct.data
    st.stride = cd.shape[1]
    st.have_best = 0
    st.gens = <int*> malloc(d * sizeof(int))
    st.seen = <int*> malloc(d * n * sizeof(int))
    st.queue = <int*> malloc(d * n * sizeof(int))
    st.qlen = <int*> malloc(d * sizeof(int))
    st.label = <int*> malloc(n * sizeof(int))
    st.best = <int*> malloc(n * n * sizeof(int))
    try:
        if (st.gens == NULL or st.seen == NULL or st.queue == NULL or st.qlen == NULL
                or st.label == NULL or st.best == NULL):
            raise MemoryError()
        with nogil:
            _canon_rec(&st, 0)
        if not st.have_best:
            return None
        return [st.best[i] for i in range(n * n)]
    finally:
        free(st.gens); free(st.seen); free(st.queue)
        free(st.qlen); free(st.label); free(st.best)

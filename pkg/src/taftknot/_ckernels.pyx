# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels``."""

import numpy as np

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport free, malloc


def apply_sparse(const int64_t[:, :, ::1] state, const int64_t[:, ::1] trans):
    cdef Py_ssize_t C = state.shape[0]
    cdef Py_ssize_t S = state.shape[1]
    cdef Py_ssize_t E = state.shape[2]
    cdef Py_ssize_t K = trans.shape[0]
    out = np.zeros((C, S, E), dtype=np.int64)
    cdef int64_t[:, :, ::1] o = out
    # nonzero span [first, last) of every row; empty rows have first == last
    span = np.zeros((C, S, 2), dtype=np.intp)
    cdef Py_ssize_t[:, :, ::1] sp = span
    cdef Py_ssize_t c, k, r, e, e0, e1, src, dst, shift
    cdef int64_t coef, v
    for c in range(C):
        for r in range(S):
            e0 = 0
            while e0 < E and state[c, r, e0] == 0:
                e0 += 1
            e1 = E
            while e1 > e0 and state[c, r, e1 - 1] == 0:
                e1 -= 1
            sp[c, r, 0] = e0
            sp[c, r, 1] = e1
    for c in range(C):
        for k in range(K):
            src = trans[k, 1]
            e0 = sp[c, src, 0]
            e1 = sp[c, src, 1]
            if e0 == e1:
                continue
            dst = trans[k, 0]
            shift = trans[k, 2]
            coef = trans[k, 3]
            if e0 < -shift:
                e0 = -shift
            if e1 > E - shift:
                e1 = E - shift
            for e in range(e0, e1):
                v = state[c, src, e]
                if v != 0:
                    o[c, dst, e + shift] += coef * v
    return out


cdef inline Py_ssize_t _find(Py_ssize_t* parent, Py_ssize_t a) nogil:
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


cdef inline void _union(Py_ssize_t* parent, Py_ssize_t a, Py_ssize_t b) nogil:
    cdef Py_ssize_t ra = _find(parent, a)
    cdef Py_ssize_t rb = _find(parent, b)
    if ra != rb:
        parent[ra] = rb


def bracket_state_counts(letters, Py_ssize_t strands):
    cdef Py_ssize_t k = len(letters)
    cdef Py_ssize_t n = strands
    counts = np.zeros((2 * k + 1, max(n, k * n) + 1), dtype=np.int64)
    cdef int64_t[:, ::1] cnt = counts
    if k == 0:
        cnt[0, n] = 1
        return counts
    if k > 62:
        raise ValueError("too many crossings for a 64-bit state index")
    cdef Py_ssize_t nodes = k * n
    cdef Py_ssize_t* parent = <Py_ssize_t*> malloc(nodes * sizeof(Py_ssize_t))
    cdef Py_ssize_t* pos = <Py_ssize_t*> malloc(k * sizeof(Py_ssize_t))
    cdef int* sgn = <int*> malloc(k * sizeof(int))
    if parent == NULL or pos == NULL or sgn == NULL:
        free(parent); free(pos); free(sgn)
        raise MemoryError()
    cdef Py_ssize_t level, p, i, cur, nxt, v, loops, a_exp
    cdef uint64_t state, total = (<uint64_t> 1) << k
    for level in range(k):
        x = int(letters[level])
        pos[level] = abs(x) - 1
        sgn[level] = 1 if x > 0 else -1
    try:
        with nogil:
            state = 0
            while state < total:
                for v in range(nodes):
                    parent[v] = v
                a_exp = 0
                for level in range(k):
                    i = pos[level]
                    cur = level * n
                    nxt = ((level + 1) % k) * n
                    for p in range(n):
                        if p != i and p != i + 1:
                            _union(parent, cur + p, nxt + p)
                    if (state >> level) & 1:
                        _union(parent, cur + i, cur + i + 1)
                        _union(parent, nxt + i, nxt + i + 1)
                        a_exp -= sgn[level]
                    else:
                        _union(parent, cur + i, nxt + i)
                        _union(parent, cur + i + 1, nxt + i + 1)
                        a_exp += sgn[level]
                loops = 0
                for v in range(nodes):
                    if parent[v] == v:
                        loops += 1
                cnt[a_exp + k, loops] += 1
                state += 1
    finally:
        free(parent)
        free(pos)
        free(sgn)
    return counts

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops. Semantics mirror ``_pykernels`` line for line."""

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs, hypot, sqrt
from libc.stdint cimport int8_t, int32_t, int64_t, uint64_t

cnp.import_array()


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


def movement_routine(const int64_t[:] indptr, const int32_t[:] indices,
                     int8_t[:] side, int start_part, int32_t[:] moves):
    cdef Py_ssize_t n = side.shape[0]
    cdef Py_ssize_t u, k
    cdef int P = start_part
    cdef int t_movement = 0
    cdef int t_no_movement = 1
    cdef int same, deg
    cdef int n_moves = 0
    cdef cnp.ndarray[cnp.int8_t, ndim=1] moved_arr = np.zeros(n, dtype=np.int8)
    cdef int8_t[:] moved = moved_arr
    with nogil:
        while True:
            for u in range(n):
                if side[u] != P or moved[u]:
                    continue
                same = 0
                for k in range(indptr[u], indptr[u + 1]):
                    if side[indices[k]] == P:
                        same += 1
                deg = <int>(indptr[u + 1] - indptr[u])
                if 2 * same > deg:
                    side[u] = 1 - P
                    moved[u] = 1
                    moves[n_moves] = <int32_t>u
                    n_moves += 1
                    t_movement = 1
                    break
            if t_movement == 0:
                t_no_movement += 1
            else:
                t_movement = 0
                t_no_movement = 1
            P = 1 - P
            if t_no_movement > 2:
                break
    return n_moves


def gray_maxcut(const uint64_t[:] adj, int n):
    cdef uint64_t full = (<uint64_t>1 << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    cdef uint64_t S = 0, best_mask = 0, step, total
    cdef int64_t cut = 0, best = 0
    cdef int b, v, same, deg
    if n <= 1:
        return 0, 0
    total = <uint64_t>1 << (n - 1)
    with nogil:
        for step in range(1, total):
            b = __builtin_ctzll(step)
            v = n - 1 - b
            deg = __builtin_popcountll(adj[v])
            if (S >> b) & 1:
                same = __builtin_popcountll(adj[v] & S)
            else:
                same = __builtin_popcountll(adj[v] & (~S) & full)
            cut += 2 * same - deg
            S ^= (<uint64_t>1 << b)
            if cut > best or (cut == best and S < best_mask):
                best = cut
                best_mask = S
    return best, best_mask


def gray_trace(const uint64_t[:] adj, int n, int64_t limit):
    cdef uint64_t full = (<uint64_t>1 << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    cdef uint64_t S = 0, step, total
    cdef int64_t cut = 0
    cdef int b, v, same, deg
    total = (<uint64_t>1 << (n - 1)) if n >= 1 else 1
    if <uint64_t>limit > total:
        limit = <int64_t>total
    masks = np.zeros(limit, dtype=np.uint64)
    cuts = np.zeros(limit, dtype=np.int64)
    cdef uint64_t[:] mv = masks
    cdef int64_t[:] cv = cuts
    if limit > 0:
        mv[0] = 0
        cv[0] = 0
    for step in range(1, <uint64_t>limit):
        b = __builtin_ctzll(step)
        v = n - 1 - b
        deg = __builtin_popcountll(adj[v])
        if (S >> b) & 1:
            same = __builtin_popcountll(adj[v] & S)
        else:
            same = __builtin_popcountll(adj[v] & (~S) & full)
        cut += 2 * same - deg
        S ^= (<uint64_t>1 << b)
        mv[step] = S
        cv[step] = cut
    return masks, cuts


def jacobi_eigh(double[:, ::1] a_in, int64_t max_rotations, double tol):
    cdef Py_ssize_t n = a_in.shape[0]
    a_arr = np.array(a_in, dtype=np.float64, copy=True)
    v_arr = np.eye(n, dtype=np.float64)
    cdef double[:, ::1] a = a_arr
    cdef double[:, ::1] V = v_arr
    cdef Py_ssize_t p, q, k
    cdef double off, scale, app, aqq, apq, theta, t, c, s, akp, akq
    cdef int64_t rotations = 0
    cdef bint converged = False
    scale = 0.0
    for p in range(n):
        for q in range(n):
            scale += a[p, q] * a[p, q]
    scale = sqrt(scale)
    if scale == 0.0:
        scale = 1.0
    with nogil:
        while rotations < max_rotations:
            off = 0.0
            for p in range(n):
                for q in range(p + 1, n):
                    off += a[p, q] * a[p, q]
            if sqrt(2.0 * off) <= tol * scale:
                converged = True
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if fabs(apq) <= 1e-300:
                        continue
                    app = a[p, p]
                    aqq = a[q, q]
                    theta = (aqq - app) / (2.0 * apq)
                    if theta >= 0:
                        t = 1.0 / (theta + hypot(theta, 1.0))
                    else:
                        t = -1.0 / (-theta + hypot(theta, 1.0))
                    c = 1.0 / sqrt(t * t + 1.0)
                    s = t * c
                    for k in range(n):
                        akp = a[k, p]
                        akq = a[k, q]
                        a[k, p] = c * akp - s * akq
                        a[k, q] = s * akp + c * akq
                    for k in range(n):
                        akp = a[p, k]
                        akq = a[q, k]
                        a[p, k] = c * akp - s * akq
                        a[q, k] = s * akp + c * akq
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    for k in range(n):
                        akp = V[k, p]
                        akq = V[k, q]
                        V[k, p] = c * akp - s * akq
                        V[k, q] = s * akp + c * akq
                    rotations += 1
    w = np.array([a_arr[i, i] for i in range(n)], dtype=np.float64)
    return w, v_arr, rotations, bool(converged)

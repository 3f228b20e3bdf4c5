# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled backend for the degree-4 identity scan.

Same contract as ``_scan_py.scan``; operates on denominator-cleared int64
structure constants (the dispatcher guarantees the accumulator bound fits).
"""

import numpy as np


def scan(long long[::1] indptr, int[::1] cols, long long[::1] vals,
         int dim, signed char[::1] parity,
         int[::1] slot0, int[::1] slot1, int[::1] slot2, int[::1] slot3,
         bint plain):
    cdef long long[::1] acc = np.zeros(dim, dtype=np.int64)
    cdef signed char[::1] seen = np.zeros(dim, dtype=np.int8)
    cdef int[::1] touched = np.zeros(dim, dtype=np.intc)
    cdef int ntouch = 0
    cdef Py_ssize_t ii, jj, kk, ll, n0 = slot0.shape[0], n1 = slot1.shape[0]
    cdef Py_ssize_t n2 = slot2.shape[0], n3 = slot3.shape[0]
    cdef int i, j, k, l, px, py, pz, pt, s1, s2, s3, s4, t, bad_flag, m
    bad = []

    for ii in range(n0):
        i = slot0[ii]
        px = parity[i]
        for jj in range(n1):
            j = slot1[jj]
            py = parity[j]
            for kk in range(n2):
                k = slot2[kk]
                pz = parity[k]
                for ll in range(n3):
                    l = slot3[ll]
                    if plain:
                        s1 = s2 = s3 = s4 = 1
                    else:
                        pt = parity[l]
                        s1 = -1 if (pt * (pz + py) + pz * py) & 1 else 1
                        s2 = -1 if (px * (py + pz + pt) + pt * pz) & 1 else 1
                        s3 = -1 if (pt * pz + pt * py) & 1 else 1
                        s4 = -1 if (py * pz) & 1 else 1
                    ntouch = _term_left(indptr, cols, vals, dim, acc, seen,
                                        touched, ntouch, i, j, k, l, 1)
                    ntouch = _term_left(indptr, cols, vals, dim, acc, seen,
                                        touched, ntouch, i, l, k, j, s1)
                    ntouch = _term_left(indptr, cols, vals, dim, acc, seen,
                                        touched, ntouch, j, l, k, i, s2)
                    ntouch = _term_right(indptr, cols, vals, dim, acc, seen,
                                         touched, ntouch, i, j, k, l, -1)
                    ntouch = _term_right(indptr, cols, vals, dim, acc, seen,
                                         touched, ntouch, i, l, j, k, -s3)
                    ntouch = _term_right(indptr, cols, vals, dim, acc, seen,
                                         touched, ntouch, i, k, j, l, -s4)
                    bad_flag = 0
                    for m in range(ntouch):
                        t = touched[m]
                        if acc[t] != 0:
                            bad_flag = 1
                        acc[t] = 0
                        seen[t] = 0
                    ntouch = 0
                    if bad_flag:
                        bad.append((i, j, k, l))
    return bad


cdef inline int _term_left(long long[::1] indptr, int[::1] cols,
                           long long[::1] vals, int dim, long long[::1] acc,
                           signed char[::1] seen, int[::1] touched, int ntouch,
                           int i, int j, int k, int l, long long sgn):
    cdef Py_ssize_t a, b, c, a0, a1, b0, b1, c0, c1
    cdef long long w, v1
    cdef int s, r, t
    a0 = indptr[i * dim + j]
    a1 = indptr[i * dim + j + 1]
    for a in range(a0, a1):
        s = cols[a]
        v1 = sgn * vals[a]
        b0 = indptr[s * dim + k]
        b1 = indptr[s * dim + k + 1]
        for b in range(b0, b1):
            r = cols[b]
            w = v1 * vals[b]
            c0 = indptr[r * dim + l]
            c1 = indptr[r * dim + l + 1]
            for c in range(c0, c1):
                t = cols[c]
                if not seen[t]:
                    seen[t] = 1
                    touched[ntouch] = t
                    ntouch += 1
                acc[t] += w * vals[c]
    return ntouch


cdef inline int _term_right(long long[::1] indptr, int[::1] cols,
                            long long[::1] vals, int dim, long long[::1] acc,
                            signed char[::1] seen, int[::1] touched, int ntouch,
                            int i, int j, int k, int l, long long sgn):
    cdef Py_ssize_t a, b, c, a0, a1, b0, b1, c0, c1
    cdef long long w, v1
    cdef int s, r, t
    a0 = indptr[i * dim + j]
    a1 = indptr[i * dim + j + 1]
    b0 = indptr[k * dim + l]
    b1 = indptr[k * dim + l + 1]
    for a in range(a0, a1):
        s = cols[a]
        v1 = sgn * vals[a]
        for b in range(b0, b1):
            r = cols[b]
            w = v1 * vals[b]
            c0 = indptr[s * dim + r]
            c1 = indptr[s * dim + r + 1]
            for c in range(c0, c1):
                t = cols[c]
                if not seen[t]:
                    seen[t] = 1
                    touched[ntouch] = t
                    ntouch += 1
                acc[t] += w * vals[c]
    return ntouch

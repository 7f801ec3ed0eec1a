# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Kazhdan-Lusztig table kernel; mirror of ``_klpure.kl_table``."""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def kl_table(rmul, lengths, bruhat):
    cdef cnp.int32_t[:, ::1] rm = np.ascontiguousarray(rmul, dtype=np.int32)
    cdef cnp.int32_t[::1] ln = np.ascontiguousarray(lengths, dtype=np.int32)
    cdef cnp.uint8_t[:, ::1] br = np.ascontiguousarray(bruhat, dtype=np.uint8)
    cdef Py_ssize_t n = rm.shape[0]
    cdef Py_ssize_t ngen = rm.shape[1]
    if n == 0:
        raise ValueError("empty group")
    cdef int maxdeg = (ln[n - 1] - 1) // 2
    if maxdeg < 0:
        maxdeg = 0
    cdef int width = maxdeg + 1

    coeffs_arr = np.zeros((n * n, width), dtype=np.int64)
    degs_arr = np.full(n * n, -1, dtype=np.int32)
    cdef cnp.int64_t[:, ::1] cof = coeffs_arr
    cdef cnp.int32_t[::1] deg = degs_arr

    cdef Py_ssize_t w, x, z, i, k, p
    cdef Py_ssize_t s, ws, xs, lw, gap, tgt, shift, d
    cdef cnp.int64_t mu, c
    cdef int bad = 0

    cof[0, 0] = 1
    deg[0] = 0
    for w in range(1, n):
        lw = ln[w]
        p = w * n + w
        cof[p, 0] = 1
        deg[p] = 0
        s = -1
        for i in range(ngen):
            if ln[rm[w, i]] < lw:
                s = i
                break
        ws = rm[w, s]
        for x in range(n):
            if x == w or not br[x, w]:
                continue
            p = x * n + w
            xs = rm[x, s]
            if ln[xs] < ln[x]:
                d = deg[xs * n + ws]
                for k in range(d + 1):
                    cof[p, k] += cof[xs * n + ws, k]
                d = deg[x * n + ws]
                for k in range(d + 1):
                    cof[p, k + 1] += cof[x * n + ws, k]
            else:
                d = deg[xs * n + ws]
                for k in range(d + 1):
                    cof[p, k + 1] += cof[xs * n + ws, k]
                d = deg[x * n + ws]
                for k in range(d + 1):
                    cof[p, k] += cof[x * n + ws, k]
            for z in range(n):
                if z == ws or not br[x, z] or not br[z, ws]:
                    continue
                if ln[rm[z, s]] >= ln[z]:
                    continue
                gap = ln[ws] - ln[z]
                if (gap - 1) % 2:
                    continue
                tgt = (gap - 1) // 2
                if tgt > deg[z * n + ws]:
                    continue
                mu = cof[z * n + ws, tgt]
                if mu == 0:
                    continue
                shift = (lw - ln[z]) // 2
                d = deg[x * n + z]
                for k in range(d + 1):
                    cof[p, k + shift] -= mu * cof[x * n + z, k]
            d = -1
            for k in range(width):
                c = cof[p, k]
                if c < 0:
                    bad = 1
                if c != 0:
                    d = k
            deg[p] = d
            if d >= 0 and 2 * d > lw - ln[x] - 1:
                bad = 2
    if bad == 1:
        raise AssertionError("negative KL coefficient")
    if bad == 2:
        raise AssertionError("KL degree bound violated")
    return coeffs_arr, degs_arr

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled skew multiplication and division; mirrors ``_pykernels``."""

from libc.stdlib cimport malloc, free

import numpy as np


cdef inline int _mod(long a, int m) nogil:
    cdef long t = a % m
    return <int>(t + m if t < 0 else t)


cdef class KernelContext:
    cdef int[:, ::1] add
    cdef int[:, ::1] mul
    cdef int[::1] neg
    cdef int[::1] inv
    cdef int[:, ::1] frob
    cdef public int r

    def __init__(self, tables, int r):
        self.r = r
        self.add = np.ascontiguousarray(tables["add"], dtype=np.int32)
        self.mul = np.ascontiguousarray(tables["mul"], dtype=np.int32)
        self.neg = np.ascontiguousarray(tables["neg"], dtype=np.int32)
        self.inv = np.ascontiguousarray(tables["inv"], dtype=np.int32)
        self.frob = np.ascontiguousarray(tables["frob"], dtype=np.int32)

    def skew_mul(self, a, b, long shift, int stride):
        cdef Py_ssize_t na = len(a), nb = len(b), i, j, k
        if na == 0 or nb == 0:
            return []
        cdef int *ca = <int *>malloc(na * sizeof(int))
        cdef int *cb = <int *>malloc(nb * sizeof(int))
        cdef int *out = <int *>malloc((na + nb - 1) * sizeof(int))
        cdef int ai, bj, fi
        try:
            for i in range(na):
                ca[i] = a[i]
            for j in range(nb):
                cb[j] = b[j]
            for k in range(na + nb - 1):
                out[k] = 0
            for i in range(na):
                ai = ca[i]
                if ai == 0:
                    continue
                fi = _mod((shift + i) * stride, self.r)
                for j in range(nb):
                    bj = cb[j]
                    if bj:
                        out[i + j] = self.add[out[i + j], self.mul[ai, self.frob[fi, bj]]]
            return [out[k] for k in range(na + nb - 1)]
        finally:
            free(ca)
            free(cb)
            free(out)

    def right_divmod(self, A, B, int stride):
        cdef Py_ssize_t n = len(B) - 1, m = len(A), d, k
        if m <= n:
            return [], list(A)
        cdef int *R = <int *>malloc(m * sizeof(int))
        cdef int *cb = <int *>malloc((n + 1) * sizeof(int))
        cdef int *Q = <int *>malloc((m - n) * sizeof(int))
        cdef int lead, q, nq, fi
        try:
            for k in range(m):
                R[k] = A[k]
            for k in range(n + 1):
                cb[k] = B[k]
            for d in range(m - n - 1, -1, -1):
                Q[d] = 0
                lead = R[d + n]
                if lead == 0:
                    continue
                fi = _mod(d * stride, self.r)
                q = self.mul[lead, self.inv[self.frob[fi, cb[n]]]]
                Q[d] = q
                nq = self.neg[q]
                for k in range(n + 1):
                    if cb[k]:
                        R[d + k] = self.add[R[d + k], self.mul[nq, self.frob[fi, cb[k]]]]
            return [Q[k] for k in range(m - n)], [R[k] for k in range(n)]
        finally:
            free(R)
            free(cb)
            free(Q)

    def left_divmod(self, A, B, int stride):
        cdef Py_ssize_t n = len(B) - 1, m = len(A), d, k
        if m <= n:
            return [], list(A)
        cdef int *R = <int *>malloc(m * sizeof(int))
        cdef int *cb = <int *>malloc((n + 1) * sizeof(int))
        cdef int *Q = <int *>malloc((m - n) * sizeof(int))
        cdef int lead, q, binv, back, t
        try:
            for k in range(m):
                R[k] = A[k]
            for k in range(n + 1):
                cb[k] = B[k]
            binv = self.inv[cb[n]]
            back = _mod(-n * stride, self.r)
            for d in range(m - n - 1, -1, -1):
                Q[d] = 0
                lead = R[d + n]
                if lead == 0:
                    continue
                q = self.frob[back, self.mul[lead, binv]]
                Q[d] = q
                for k in range(n + 1):
                    if cb[k]:
                        t = self.frob[_mod(k * stride, self.r), q]
                        R[d + k] = self.add[R[d + k], self.neg[self.mul[cb[k], t]]]
            return [Q[k] for k in range(m - n)], [R[k] for k in range(n)]
        finally:
            free(R)
            free(cb)
            free(Q)

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled int64 versions of the kernels in ``_pykernels``.

Callers guarantee that no intermediate value overflows 64 bits; see the
bounds checked in ``kernels``.
"""

from libc.stdlib cimport malloc, free


def cyclic_convolve(u, v):
    cdef Py_ssize_t m = len(u)
    cdef Py_ssize_t i, j, k
    cdef long long ui
    cdef long long *cu = <long long *> malloc(m * sizeof(long long))
    cdef long long *cv = <long long *> malloc(m * sizeof(long long))
    cdef long long *out = <long long *> malloc(m * sizeof(long long))
    if cu == NULL or cv == NULL or out == NULL:
        free(cu); free(cv); free(out)
        raise MemoryError()
    try:
        for i in range(m):
            cu[i] = u[i]
            cv[i] = v[i]
            out[i] = 0
        for i in range(m):
            ui = cu[i]
            if ui == 0:
                continue
            k = i
            for j in range(m):
                out[k] += ui * cv[j]
                k += 1
                if k == m:
                    k = 0
        return [out[i] for i in range(m)]
    finally:
        free(cu); free(cv); free(out)


def dedekind_numerator(long long a, long long b):
    cdef long long r = 0, total = 0, k
    a %= b
    if a < 0:
        a += b
    for k in range(1, b):
        r += a
        if r >= b:
            r -= b
        if r:
            total += (2 * r - b) * (2 * k - b)
    return total


def partition_table(parts, Py_ssize_t n):
    cdef long long *counts = <long long *> malloc((n + 1) * sizeof(long long))
    cdef Py_ssize_t a, k
    if counts == NULL:
        raise MemoryError()
    try:
        for k in range(n + 1):
            counts[k] = 0
        counts[0] = 1
        for p in parts:
            a = p
            for k in range(a, n + 1):
                counts[k] += counts[k - a]
        return [counts[k] for k in range(n + 1)]
    finally:
        free(counts)

# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled phase-assembly kernels.

Single-pass loops over the p x p (or p x (p-1)) index grids with
incremental mod-p exponent updates; no large integer temporaries.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND_NAME = "compiled"


def outer_product_phases(Py_ssize_t p, const double complex[::1] roots):
    """M[j, i] = roots[(j*i) mod p], the unnormalized DFT kernel."""
    out_arr = np.empty((p, p), dtype=np.complex128)
    cdef double complex[:, ::1] out = out_arr
    cdef Py_ssize_t j, i, e
    for j in range(p):
        e = 0
        for i in range(p):
            out[j, i] = roots[e]
            e += j
            if e >= p:
                e -= p
    return out_arr


def quadratic_kernel_phases(Py_ssize_t p, Py_ssize_t ak, Py_ssize_t c0,
                            const double complex[::1] roots):
    """M[i, j-1] = roots[(ak*(j-i)^2 - c0*i^2) mod p], i in 0..p-1, j in 1..p-1."""
    out_arr = np.empty((p, p - 1), dtype=np.complex128)
    cdef double complex[:, ::1] out = out_arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1] sq_arr = np.empty(p, dtype=np.int64)
    cdef cnp.int64_t[::1] sq = sq_arr
    cdef Py_ssize_t i, jm, d, e, base
    for i in range(p):
        sq[i] = (<Py_ssize_t> i * i) % p
    for i in range(p):
        base = (p - (c0 * sq[i]) % p) % p
        for jm in range(p - 1):
            d = jm + 1 - i
            if d < 0:
                d += p
            e = (ak * sq[d] + base) % p
            out[i, jm] = roots[e]
    return out_arr


def power_character_phases(Py_ssize_t p, const cnp.int64_t[::1] dlog,
                           const double complex[::1] roots):
    """M[j-1, x-1] = roots[(x*dlog[j]) mod (p-1)], j, x in 1..p-1."""
    out_arr = np.empty((p - 1, p - 1), dtype=np.complex128)
    cdef double complex[:, ::1] out = out_arr
    cdef Py_ssize_t jm, xm, d, e, n = p - 1
    for jm in range(n):
        d = dlog[jm + 1]
        e = d
        for xm in range(n):
            out[jm, xm] = roots[e]
            e += d
            if e >= n:
                e -= n
    return out_arr


def gauss_sums(Py_ssize_t p, const double complex[::1] roots):
    """G[c-1] = sum_t roots[(c*t^2) mod p] for c in 1..p-1."""
    out_arr = np.empty(p - 1, dtype=np.complex128)
    cdef double complex[::1] out = out_arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1] sq_arr = np.empty(p, dtype=np.int64)
    cdef cnp.int64_t[::1] sq = sq_arr
    cdef Py_ssize_t c, t
    cdef double complex acc
    for t in range(p):
        sq[t] = (<Py_ssize_t> t * t) % p
    for c in range(1, p):
        acc = 0
        for t in range(p):
            acc = acc + roots[(c * sq[t]) % p]
        out[c - 1] = acc
    return out_arr

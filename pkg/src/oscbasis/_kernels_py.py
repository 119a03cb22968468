"""Numpy fallback for the hot phase-assembly kernels.

Same contract as the compiled extension: exponents are reduced in exact
integer arithmetic (int64) before any root-of-unity lookup, so outputs
match the compiled kernels bit for bit (gauss_sums aside, where the
summation order differs).
"""

import numpy as np

BACKEND_NAME = "python"


def outer_product_phases(p, roots):
    """M[j, i] = roots[(j*i) mod p], the unnormalized DFT kernel."""
    idx = np.arange(p, dtype=np.int64)
    return roots[np.outer(idx, idx) % p]


def quadratic_kernel_phases(p, ak, c0, roots):
    """M[i, j-1] = roots[(ak*(j-i)^2 - c0*i^2) mod p], i in 0..p-1, j in 1..p-1."""
    idx = np.arange(p, dtype=np.int64)
    sq = idx * idx % p
    diff = (np.arange(1, p, dtype=np.int64)[None, :] - idx[:, None]) % p
    exps = (ak * sq[diff] - c0 * sq[:, None]) % p
    return roots[exps]


def power_character_phases(p, dlog, roots):
    """M[j-1, x-1] = roots[(x*dlog[j]) mod (p-1)], j, x in 1..p-1."""
    x = np.arange(1, p, dtype=np.int64)
    exps = dlog[1:, None] * x[None, :] % (p - 1)
    return roots[exps]


def gauss_sums(p, roots):
    """G[c-1] = sum_t roots[(c*t^2) mod p] for c in 1..p-1."""
    idx = np.arange(p, dtype=np.int64)
    sq = idx * idx % p
    exps = np.arange(1, p, dtype=np.int64)[:, None] * sq[None, :] % p
    return roots[exps].sum(axis=1)

"""Finite Heisenberg group H = F_p^2 x F_p and its representation pi.

Group law twists the center by the symplectic form:

    (t1,w1,z1)*(t2,w2,z2) = (t1+t2, w1+w2, z1+z2 + 2^-1*(t1*w2 - t2*w1))

pi acts on C(F_p) with central character eta^z:

    pi(t,w,z)[v](i) = eta^(2^-1*t*w + z + w*i) * v(i+t)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .arith import PrimeContext
from .cyclotomic import eta_table
from .errors import ContextMismatchError, LengthMismatchError


@dataclass(frozen=True)
class HeisenbergElement:
    """Group element (t, w, z), components stored reduced mod p."""

    p: int
    t: int
    w: int
    z: int

    def __post_init__(self):
        object.__setattr__(self, "t", self.t % self.p)
        object.__setattr__(self, "w", self.w % self.p)
        object.__setattr__(self, "z", self.z % self.p)


def heisenberg_identity(p: int) -> HeisenbergElement:
    return HeisenbergElement(p, 0, 0, 0)


def symplectic_form(v1: tuple[int, int], v2: tuple[int, int], p: int) -> int:
    """omega((t1,w1),(t2,w2)) = t1*w2 - t2*w1 mod p."""
    return (v1[0] * v2[1] - v2[0] * v1[1]) % p


def heisenberg_mul(x: HeisenbergElement, y: HeisenbergElement) -> HeisenbergElement:
    if x.p != y.p:
        raise ContextMismatchError(f"mixed primes {x.p} and {y.p}")
    p = x.p
    inv2 = pow(2, p - 2, p)
    z = (x.z + y.z + inv2 * symplectic_form((x.t, x.w), (y.t, y.w), p)) % p
    return HeisenbergElement(p, x.t + y.t, x.w + y.w, z)


def random_heisenberg(ctx: PrimeContext, rng: np.random.Generator) -> HeisenbergElement:
    t, w, z = (int(v) for v in rng.integers(0, ctx.p, 3))
    return HeisenbergElement(ctx.p, t, w, z)


def _phase_exponents(ctx: PrimeContext, h: HeisenbergElement) -> np.ndarray:
    """Exponent of eta at output coordinate i: 2^-1*t*w + z + w*i, mod p."""
    p = ctx.p
    base = (ctx.inv[2] * h.t % p * h.w + h.z) % p
    return (base + h.w * np.arange(p, dtype=np.int64)) % p


def pi_apply(ctx: PrimeContext, h: HeisenbergElement, v: np.ndarray) -> np.ndarray:
    """out(i) = eta^(2^-1*t*w + z + w*i) * v(i+t), indices mod p."""
    p = ctx.p
    if v.shape != (p,):
        raise LengthMismatchError(f"vector shape {v.shape}, expected ({p},)")
    eta = eta_table(ctx).values
    shifted = np.roll(v, -h.t)  # shifted[i] = v[(i+t) mod p]
    return eta[_phase_exponents(ctx, h)] * shifted


def pi_matrix(ctx: PrimeContext, h: HeisenbergElement) -> np.ndarray:
    """Dense unitary matrix of pi(h); one nonzero per column."""
    p = ctx.p
    eta = eta_table(ctx).values
    cols = np.arange(p, dtype=np.int64)
    rows = (cols - h.t) % p
    m = np.zeros((p, p), dtype=np.complex128)
    m[rows, cols] = eta[_phase_exponents(ctx, h)][rows]
    return m

"""Roots of unity and complex vector primitives on the p-dimensional space.

Two root orders matter: theta = exp(2*pi*i/(p-1)) drives multiplicative
characters of F_p*, eta = exp(2*pi*i/p) drives additive characters of F_p.
Every phase in the package is values[e mod N] for an integer e reduced
exactly before lookup; no exponent ever touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .arith import PrimeContext
from .backend import get_kernels
from .errors import LengthMismatchError, ZeroArgumentError


@dataclass(frozen=True, eq=False)
class RootTable:
    """The N-th roots of unity: values[j] = exp(2*pi*i*j/N)."""

    order: int
    values: np.ndarray

    def __post_init__(self):
        self.values.flags.writeable = False


@lru_cache(maxsize=64)
def root_table(order: int) -> RootTable:
    values = np.exp(2j * np.pi * np.arange(order) / order)
    values[0] = 1.0  # exact, regardless of libm
    return RootTable(order=order, values=values)


def theta_table(ctx: PrimeContext) -> RootTable:
    """(p-1)-th roots of unity."""
    return root_table(ctx.p - 1)


def eta_table(ctx: PrimeContext) -> RootTable:
    """p-th roots of unity."""
    return root_table(ctx.p)


def root_power(table: RootTable, exponent: int) -> complex:
    """table root raised to any signed integer exponent, reduced exactly."""
    return complex(table.values[exponent % table.order])


def gauss_sum(ctx: PrimeContext, c: int) -> complex:
    """Quadratic Gauss sum sum_t eta^(c*t^2); equals sigma(c)*sqrt(p) here.

    The closed form sigma(c)*sqrt(p) holds because p = 1 (mod 4); it is
    asserted by the verification suite, not assumed by this function.
    """
    c = c % ctx.p
    if c == 0:
        raise ZeroArgumentError("gauss sum requires c != 0")
    eta = eta_table(ctx).values
    t = np.arange(ctx.p, dtype=np.int64)
    return complex(eta[c * (t * t % ctx.p) % ctx.p].sum())


def gauss_sum_table(ctx: PrimeContext, backend: str | None = None) -> np.ndarray:
    """All p-1 quadratic Gauss sums at once; entry c-1 holds gauss_sum(c)."""
    return get_kernels(backend).gauss_sums(ctx.p, eta_table(ctx).values)


def inner_product(u: np.ndarray, v: np.ndarray) -> complex:
    """Standard inner product sum_i conj(u_i) v_i."""
    if u.shape != v.shape:
        raise LengthMismatchError(f"shapes {u.shape} and {v.shape} differ")
    return complex(np.vdot(u, v))

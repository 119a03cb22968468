"""Exact modular arithmetic over F_p for primes p = 1 (mod 4).

A PrimeContext bundles the prime p, a generator a of the multiplicative
group, and eagerly built lookup tables (discrete logs, inverses, Legendre
signs). Everything downstream reduces exponents through these tables, so
context construction is the single place where number theory happens.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    NotAGeneratorError,
    NotOneMod4Error,
    NotPrimeError,
    ZeroArgumentError,
)

# Deterministic Miller-Rabin witness set, valid for all n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (desk-scale inputs)."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for q in _MR_WITNESSES:
        x = pow(q, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    """Distinct prime factors by trial division (n is p-1, desk scale)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_generator(g: int, p: int, factors: list[int]) -> bool:
    return all(pow(g, (p - 1) // q, p) != 1 for q in factors)


def smallest_primitive_root(p: int) -> int:
    """Smallest generator of F_p*, by exhaustive order check."""
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if _is_generator(g, p, factors):
            return g
    raise NotPrimeError(f"{p} has no primitive root; not prime?")


@dataclass(frozen=True, eq=False)
class PrimeContext:
    """Immutable arithmetic state for F_p, p = 1 (mod 4).

    Tables are length-p int arrays indexed by residue; index 0 is a
    sentinel (dlog[0] = -1, inv[0] = 0, legendre[0] = 0) and is never a
    valid argument downstream.
    """

    p: int
    k: int
    a: int
    dlog: np.ndarray
    inv: np.ndarray
    legendre: np.ndarray

    def __post_init__(self):
        for table in (self.dlog, self.inv, self.legendre):
            table.flags.writeable = False


def make_context(p: int, generator_override: int | None = None) -> PrimeContext:
    """Build the full arithmetic context for a prime p = 1 (mod 4).

    The default generator is the smallest primitive root, so contexts
    (and every basis derived from them) are reproducible from p alone.
    """
    p = int(p)
    if not is_prime(p):
        raise NotPrimeError(f"p={p} is not prime")
    if p % 4 != 1:
        raise NotOneMod4Error(
            f"p={p} is {p % 4} (mod 4); the construction requires p = 1 (mod 4)"
        )
    factors = _prime_factors(p - 1)
    if generator_override is None:
        a = smallest_primitive_root(p)
    else:
        a = int(generator_override) % p
        if a == 0 or not _is_generator(a, p, factors):
            raise NotAGeneratorError(f"{generator_override} does not generate F_{p}*")

    dlog = np.full(p, -1, dtype=np.int64)
    v = 1
    for e in range(p - 1):
        dlog[v] = e
        v = v * a % p

    inv = np.zeros(p, dtype=np.int64)
    inv[1:] = [pow(b, p - 2, p) for b in range(1, p)]

    legendre = np.zeros(p, dtype=np.int64)
    legendre[1:] = np.where(dlog[1:] % 2 == 0, 1, -1)

    return PrimeContext(p=p, k=(p - 1) // 4, a=a, dlog=dlog, inv=inv, legendre=legendre)


def legendre_symbol(ctx: PrimeContext, b: int) -> int:
    """Quadratic character sigma(b) = b^((p-1)/2) reduced to +1 or -1."""
    b = b % ctx.p
    if b == 0:
        raise ZeroArgumentError("legendre symbol of 0 is undefined")
    return int(ctx.legendre[b])


def mod_inverse(ctx: PrimeContext, b: int) -> int:
    """Multiplicative inverse of b in F_p*."""
    b = b % ctx.p
    if b == 0:
        raise ZeroArgumentError("0 has no inverse mod p")
    return int(ctx.inv[b])

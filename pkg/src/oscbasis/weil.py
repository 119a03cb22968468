"""SL2(F_p), its action on the Heisenberg group, and the Weil representation.

rho is realized through the Bruhat factorization into scale, chirp and
Fourier operators:

    S_u: delta_i -> sigma(u) * delta_{u*i}         (signed permutation)
    N_b: delta_i -> eta^(-2^-1*b*i^2) * delta_i    (quadratic chirp)
    F:   delta_j -> p^-1/2 sum_i eta^(j*i) delta_i (DFT, positive kernel)

    g = [[a,b],[c,d]], b != 0:  rho(g) = sigma(2) * S_b N_{b*d} F N_{a*b^-1}
    g lower triangular (b = 0): rho(g) = S_a N_{a*c}

The sigma(2) in the b != 0 branch is the normalized Gauss sum of the chirp
quadratic form x -> eta^(2^-1 x^2). It is what makes the factored map an
actual homomorphism: without it the products pick up -1 defects on part of
the group whenever p = 5 (mod 8) (where sigma(2) = -1), and SL2(F_p) has no
nontrivial characters that could absorb them. One side effect worth
remembering: rho(w) = sigma(2) * F, which is -F for p = 5 (mod 8).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .arith import PrimeContext
from .backend import get_kernels
from .cyclotomic import eta_table
from .errors import ContextMismatchError, NotUnimodularError, ZeroArgumentError
from .heisenberg import HeisenbergElement


@dataclass(frozen=True)
class SL2Element:
    """2x2 matrix [[a,b],[c,d]] over F_p with determinant 1."""

    p: int
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        p = self.p
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, getattr(self, name) % p)
        det = (self.a * self.d - self.b * self.c) % p
        if det != 1:
            raise NotUnimodularError(f"determinant {det} != 1 (mod {p})")


def sl2_identity(p: int) -> SL2Element:
    return SL2Element(p, 1, 0, 0, 1)


def weyl_element(p: int) -> SL2Element:
    """w = [[0,1],[-1,0]]."""
    return SL2Element(p, 0, 1, -1, 0)


def scale_element(p: int, u: int) -> SL2Element:
    """g_u = [[u,0],[0,u^-1]] for u != 0."""
    if u % p == 0:
        raise ZeroArgumentError("scale element requires u != 0")
    return SL2Element(p, u, 0, 0, pow(u % p, p - 2, p))


def chirp_element(p: int, b: int) -> SL2Element:
    """[[1,0],[b,1]], the lower-triangular chirp generator."""
    return SL2Element(p, 1, 0, b, 1)


def sl2_mul(g: SL2Element, h: SL2Element) -> SL2Element:
    if g.p != h.p:
        raise ContextMismatchError(f"mixed primes {g.p} and {h.p}")
    p = g.p
    return SL2Element(
        p,
        g.a * h.a + g.b * h.c,
        g.a * h.b + g.b * h.d,
        g.c * h.a + g.d * h.c,
        g.c * h.b + g.d * h.d,
    )


def sl2_inverse(g: SL2Element) -> SL2Element:
    return SL2Element(g.p, g.d, -g.b, -g.c, g.a)


def element_order(g: SL2Element) -> int:
    """Multiplicative order of g; the group is finite so this terminates."""
    ident = sl2_identity(g.p)
    order, v = 1, g
    while v != ident:
        v = sl2_mul(v, g)
        order += 1
    return order


def sl2_act_on_h(g: SL2Element, h: HeisenbergElement) -> HeisenbergElement:
    """g.(t,w,z) = (a*t + b*w, c*t + d*w, z); an automorphism of H."""
    if g.p != h.p:
        raise ContextMismatchError(f"mixed primes {g.p} and {h.p}")
    return HeisenbergElement(g.p, g.a * h.t + g.b * h.w, g.c * h.t + g.d * h.w, h.z)


def random_sl2(ctx: PrimeContext, rng: np.random.Generator) -> SL2Element:
    """Uniform-enough sampling: draw (a,b,c), solve d when a != 0."""
    p = ctx.p
    while True:
        a, b, c = (int(v) for v in rng.integers(0, p, 3))
        if a != 0:
            d = (1 + b * c) * int(ctx.inv[a]) % p
            return SL2Element(p, a, b, c, d)


# -- Bruhat factorization ----------------------------------------------------


@dataclass(frozen=True)
class Scale:
    u: int


@dataclass(frozen=True)
class Chirp:
    b: int


@dataclass(frozen=True)
class Fourier:
    pass


BruhatFactor = Union[Scale, Chirp, Fourier]


@dataclass(frozen=True)
class BruhatFactorization:
    """Ordered factors of g; the rightmost factor applies first to vectors."""

    p: int
    factors: tuple[BruhatFactor, ...]


def bruhat_decompose(g: SL2Element) -> BruhatFactorization:
    """Factor g as Scale*Chirp*Fourier*Chirp (b != 0) or Scale*Chirp (b = 0)."""
    p = g.p
    if g.b != 0:
        binv = pow(g.b, p - 2, p)
        factors = (
            Scale(g.b),
            Chirp(g.b * g.d % p),
            Fourier(),
            Chirp(g.a * binv % p),
        )
    else:
        factors = (Scale(g.a), Chirp(g.a * g.c % p))
    return BruhatFactorization(p=p, factors=factors)


def factor_sl2(factor: BruhatFactor, p: int) -> SL2Element:
    """SL2 matrix form of a single factor."""
    if isinstance(factor, Scale):
        return scale_element(p, factor.u)
    if isinstance(factor, Chirp):
        return chirp_element(p, factor.b)
    return weyl_element(p)


def bruhat_reconstruct(fact: BruhatFactorization) -> SL2Element:
    """Exact product of the factor matrix forms, left to right."""
    out = sl2_identity(fact.p)
    for factor in fact.factors:
        out = sl2_mul(out, factor_sl2(factor, fact.p))
    return out


# -- Representation matrices -------------------------------------------------


def _chirp_phases(ctx: PrimeContext, b: int) -> np.ndarray:
    """Diagonal of N_b: eta^(-2^-1*b*i^2) at coordinate i."""
    p = ctx.p
    i = np.arange(p, dtype=np.int64)
    exps = (-int(ctx.inv[2]) * b % p) * (i * i % p) % p
    return eta_table(ctx).values[exps]


def rho_scale(ctx: PrimeContext, u: int) -> np.ndarray:
    """Matrix of S_u: delta_i -> sigma(u) delta_{u*i}."""
    p = ctx.p
    u = u % p
    if u == 0:
        raise ZeroArgumentError("scale operator requires u != 0")
    cols = np.arange(p, dtype=np.int64)
    m = np.zeros((p, p), dtype=np.complex128)
    m[u * cols % p, cols] = float(ctx.legendre[u])
    return m


def rho_chirp(ctx: PrimeContext, b: int) -> np.ndarray:
    """Matrix of N_b, a unitary diagonal."""
    return np.diag(_chirp_phases(ctx, b % ctx.p))


def rho_fourier(ctx: PrimeContext, backend: str | None = None) -> np.ndarray:
    """The DFT matrix F[j, i] = eta^(j*i) / sqrt(p)."""
    p = ctx.p
    phases = get_kernels(backend).outer_product_phases(p, eta_table(ctx).values)
    return phases * (1.0 / np.sqrt(p))


def fourier_normalization(ctx: PrimeContext) -> int:
    """sigma(2): normalized Gauss sum of x -> eta^(2^-1 x^2).

    The sign carried by the Fourier factor inside rho_matrix. Equals +1
    for p = 1, 7 (mod 8) and -1 for p = 3, 5 (mod 8); only p = 1 (mod 4)
    reaches this code, so the -1 case is exactly p = 5 (mod 8).
    """
    return int(ctx.legendre[2 % ctx.p])


def rho_matrix(ctx: PrimeContext, g: SL2Element, fourier: np.ndarray | None = None) -> np.ndarray:
    """Weil representation matrix of g (unitary, multiplicative in g).

    Built from the Bruhat factors without dense products: chirps scale
    rows/columns, the scale operator permutes rows. Pass a precomputed
    ``fourier`` matrix to amortize the DFT kernel across many calls.
    """
    if g.p != ctx.p:
        raise ContextMismatchError(f"element over F_{g.p}, context over F_{ctx.p}")
    p = ctx.p
    if g.b != 0:
        f = rho_fourier(ctx) if fourier is None else fourier
        right = _chirp_phases(ctx, g.a * int(ctx.inv[g.b]) % p)
        left = _chirp_phases(ctx, g.b * g.d % p)
        scaled = f * np.outer(left, right)
        sign = float(ctx.legendre[g.b] * fourier_normalization(ctx))
        out = np.empty_like(scaled)
        rows = g.b * np.arange(p, dtype=np.int64) % p
        out[rows, :] = sign * scaled
        return out
    diag = _chirp_phases(ctx, g.a * g.c % p) * float(ctx.legendre[g.a])
    cols = np.arange(p, dtype=np.int64)
    out = np.zeros((p, p), dtype=np.complex128)
    out[g.a * cols % p, cols] = diag
    return out


# -- The torus fixed by the DFT ----------------------------------------------


def torus_membership(g: SL2Element) -> bool:
    """True iff g = [[alpha,-beta],[beta,alpha]] with alpha^2+beta^2 = 1."""
    return (
        g.a == g.d
        and (g.b + g.c) % g.p == 0
        and (g.a * g.a + g.c * g.c) % g.p == 1
    )


def conjugator(ctx: PrimeContext) -> SL2Element:
    """s = [[1, 2^-1*a^k],[a^k, 2^-1]], the matrix conjugating g_a into the torus."""
    p = ctx.p
    ak = pow(ctx.a, ctx.k, p)
    inv2 = int(ctx.inv[2])
    return SL2Element(p, 1, inv2 * ak, ak, inv2)


def torus_generator(ctx: PrimeContext) -> SL2Element:
    """t = s g_a s^-1, a generator of the order-(p-1) torus commuting with w.

    Computed by explicit conjugation; t is conjugate to g_a, so its order
    is the order of a in F_p*, which is p-1.
    """
    s = conjugator(ctx)
    ga = scale_element(ctx.p, ctx.a)
    return sl2_mul(sl2_mul(s, ga), sl2_inverse(s))

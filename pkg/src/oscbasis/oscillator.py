"""The canonical DFT eigenbasis and the discrete oscillator transform.

psi_x diagonalizes the scale operator S_a (multiplicative characters,
plus delta_0); phi_x is its image under the torus conjugation and is
given in closed form:

    phi_0(i) = p^-1/2 * eta^(2^-1*a^k*i^2)
    phi_x(i) = (p(p-1))^-1/2 * sum_{j=1}^{p-1}
               theta^(x*log_a j) * eta^(a^k*(j-i)^2 - 2^-1*a^k*i^2)

Column x of the oscillator transform Theta_p is phi_x; F Theta_p =
Theta_p diag((-i)^x).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .arith import PrimeContext
from .backend import get_kernels
from .cyclotomic import eta_table, root_power, theta_table
from .errors import IndexOutOfRangeError, LengthMismatchError

_DFT_EIGENVALUES = (1 + 0j, -1j, -1 + 0j, 1j)  # (-i)^x by x mod 4


@dataclass(frozen=True, eq=False)
class EigenvectorRecord:
    """Basis vector phi_x with its DFT and torus eigenvalues."""

    x: int
    vector: np.ndarray
    dft_eigenvalue: complex
    torus_eigenvalue: complex


@dataclass(frozen=True, eq=False)
class OscillatorBasis:
    """All p records plus Theta_p, whose column x is phi_x."""

    p: int
    generator: int
    records: tuple[EigenvectorRecord, ...]
    matrix: np.ndarray

    @property
    def dft_eigenvalues(self) -> np.ndarray:
        return np.array([r.dft_eigenvalue for r in self.records])

    @property
    def torus_eigenvalues(self) -> np.ndarray:
        return np.array([r.torus_eigenvalue for r in self.records])


def _check_index(ctx: PrimeContext, x: int) -> int:
    x = int(x)
    if not 0 <= x <= ctx.p - 1:
        raise IndexOutOfRangeError(f"x={x} outside 0..{ctx.p - 1}")
    return x


def dft_eigenvalue(x: int) -> complex:
    """(-i)^x."""
    if x < 0:
        raise IndexOutOfRangeError(f"x={x} is negative")
    return _DFT_EIGENVALUES[x % 4]


def torus_eigenvalue(ctx: PrimeContext, x: int) -> complex:
    """theta^((p-1)/2 - x), the eigenvalue of rho(t) on phi_x (and of
    rho(g_a) on psi_x)."""
    x = _check_index(ctx, x)
    return root_power(theta_table(ctx), (ctx.p - 1) // 2 - x)


def psi_rho_ga_eigenvalue(ctx: PrimeContext, x: int) -> complex:
    """Eigenvalue of the scale operator S_a on psi_x; same torus character."""
    return torus_eigenvalue(ctx, x)


def psi_vector(ctx: PrimeContext, x: int) -> np.ndarray:
    """Eigenvector of S_a: delta_0 for x=0, else a multiplicative character.

    psi_x(i) = theta^(x * log_a i) / sqrt(p-1) for i != 0, and psi_x(0) = 0.
    """
    x = _check_index(ctx, x)
    p = ctx.p
    v = np.zeros(p, dtype=np.complex128)
    if x == 0:
        v[0] = 1.0
        return v
    theta = theta_table(ctx).values
    v[1:] = theta[x * ctx.dlog[1:] % (p - 1)] / np.sqrt(p - 1)
    return v


def psi_matrix(ctx: PrimeContext, backend: str | None = None) -> np.ndarray:
    """All psi_x as columns (x = 0..p-1); unitary."""
    p = ctx.p
    m = np.zeros((p, p), dtype=np.complex128)
    m[0, 0] = 1.0
    chars = get_kernels(backend).power_character_phases(
        p, ctx.dlog, theta_table(ctx).values
    )
    m[1:, 1:] = chars / np.sqrt(p - 1)
    return m


def _quadratic_kernel(ctx: PrimeContext, backend: str | None = None) -> np.ndarray:
    """Phases eta^(a^k*(j-i)^2 - 2^-1*a^k*i^2), rows i = 0..p-1, cols j = 1..p-1."""
    p = ctx.p
    ak = pow(ctx.a, ctx.k, p)
    c0 = int(ctx.inv[2]) * ak % p
    return get_kernels(backend).quadratic_kernel_phases(p, ak, c0, eta_table(ctx).values)


def phi_vector(ctx: PrimeContext, x: int) -> np.ndarray:
    """The closed-form DFT eigenvector phi_x, unit norm."""
    x = _check_index(ctx, x)
    p = ctx.p
    if x == 0:
        ak = pow(ctx.a, ctx.k, p)
        c0 = int(ctx.inv[2]) * ak % p
        i = np.arange(p, dtype=np.int64)
        return eta_table(ctx).values[c0 * (i * i % p) % p] / np.sqrt(p)
    theta = theta_table(ctx).values
    u = theta[x * ctx.dlog[1:] % (p - 1)]
    return _quadratic_kernel(ctx) @ u / np.sqrt(p * (p - 1))


def build_basis(ctx: PrimeContext, backend: str | None = None) -> OscillatorBasis:
    """Assemble Theta_p and all eigenvector records.

    Columns 1..p-1 come from one kernel-matrix/character-matrix product;
    column 0 is the bare quadratic chirp. O(p^2) phase assembly plus one
    dense matrix product.
    """
    p = ctx.p
    kern = get_kernels(backend)
    theta = theta_table(ctx).values
    eta = eta_table(ctx).values
    ak = pow(ctx.a, ctx.k, p)
    c0 = int(ctx.inv[2]) * ak % p

    matrix = np.empty((p, p), dtype=np.complex128)
    i = np.arange(p, dtype=np.int64)
    matrix[:, 0] = eta[c0 * (i * i % p) % p] / np.sqrt(p)
    kernel = kern.quadratic_kernel_phases(p, ak, c0, eta)
    chars = kern.power_character_phases(p, ctx.dlog, theta)
    matrix[:, 1:] = kernel @ chars / np.sqrt(p * (p - 1))
    matrix.flags.writeable = False

    records = tuple(
        EigenvectorRecord(
            x=x,
            vector=matrix[:, x],
            dft_eigenvalue=dft_eigenvalue(x),
            torus_eigenvalue=torus_eigenvalue(ctx, x),
        )
        for x in range(p)
    )
    return OscillatorBasis(p=p, generator=ctx.a, records=records, matrix=matrix)


def oscillator_transform(basis: OscillatorBasis, v: np.ndarray) -> np.ndarray:
    """Coefficients of v in the phi basis: (Theta_p)^dagger v."""
    if v.shape != (basis.p,):
        raise LengthMismatchError(f"vector shape {v.shape}, expected ({basis.p},)")
    return basis.matrix.conj().T @ v

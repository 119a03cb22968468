"""Canonical eigenbasis of the discrete Fourier transform over F_p and the
discrete oscillator transform, for primes p = 1 (mod 4).

The basis is built in closed form from the Weil representation of
SL2(F_p): phi_x diagonalizes both the DFT (eigenvalue (-i)^x) and the
torus operator rho(t). Everything is certified against brute-force
oracles in :mod:`oscbasis.verify`.
"""

__version__ = "0.1.0"

from .arith import PrimeContext, legendre_symbol, make_context, mod_inverse
from .backend import available_backends, default_backend, get_kernels
from .cyclotomic import (
    RootTable,
    eta_table,
    gauss_sum,
    gauss_sum_table,
    inner_product,
    root_power,
    root_table,
    theta_table,
)
from .errors import (
    ContextMismatchError,
    IndexOutOfRangeError,
    LengthMismatchError,
    NotAGeneratorError,
    NotOneMod4Error,
    NotOrderFourError,
    NotPrimeError,
    NotUnimodularError,
    OscBasisError,
    ZeroArgumentError,
)
from .heisenberg import (
    HeisenbergElement,
    heisenberg_identity,
    heisenberg_mul,
    pi_apply,
    pi_matrix,
    symplectic_form,
)
from .oscillator import (
    EigenvectorRecord,
    OscillatorBasis,
    build_basis,
    dft_eigenvalue,
    oscillator_transform,
    phi_vector,
    psi_matrix,
    psi_rho_ga_eigenvalue,
    psi_vector,
    torus_eigenvalue,
)
from .verify import (
    CheckResult,
    VerificationReport,
    check_basis_against_projectors,
    dft_matrix,
    run_full_suite,
    spectral_projector,
)
from .weil import (
    BruhatFactorization,
    Chirp,
    Fourier,
    Scale,
    SL2Element,
    bruhat_decompose,
    bruhat_reconstruct,
    conjugator,
    element_order,
    fourier_normalization,
    rho_chirp,
    rho_fourier,
    rho_matrix,
    rho_scale,
    sl2_act_on_h,
    sl2_identity,
    sl2_inverse,
    sl2_mul,
    torus_generator,
    torus_membership,
    weyl_element,
)

"""Exception types shared across the package."""


class OscBasisError(Exception):
    """Base class for all oscbasis errors."""


class NotPrimeError(OscBasisError):
    """Raised when the modulus is not a prime number."""


class NotOneMod4Error(OscBasisError):
    """Raised when the prime is not congruent to 1 mod 4 (split-torus case only)."""


class NotAGeneratorError(OscBasisError):
    """Raised when a requested generator does not generate the multiplicative group."""


class ZeroArgumentError(OscBasisError):
    """Raised when an operation requires a nonzero residue."""


class LengthMismatchError(OscBasisError):
    """Raised when vector or matrix dimensions do not match the prime."""


class ContextMismatchError(OscBasisError):
    """Raised when two elements live over different primes."""


class IndexOutOfRangeError(OscBasisError):
    """Raised when a basis index x falls outside {0, ..., p-1}."""


class NotUnimodularError(OscBasisError):
    """Raised when a 2x2 matrix over F_p does not have determinant 1."""


class NotOrderFourError(OscBasisError):
    """Raised when a matrix passed as the DFT fails the F^4 = I residual gate."""

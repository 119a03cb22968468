"""Kernel backend selection.

The compiled extension is preferred when it was built; the numpy fallback
is always available. ``OSCBASIS_BACKEND=python`` (or ``compiled``) in the
environment overrides the default.
"""

import os

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built; pure-python install
    _compiled = None

_ENV_VAR = "OSCBASIS_BACKEND"


def available_backends() -> tuple[str, ...]:
    if _compiled is not None:
        return ("compiled", "python")
    return ("python",)


def default_backend() -> str:
    forced = os.environ.get(_ENV_VAR)
    if forced:
        if forced not in ("compiled", "python"):
            raise ValueError(f"{_ENV_VAR} must be 'compiled' or 'python', got {forced!r}")
        if forced == "compiled" and _compiled is None:
            raise ValueError("compiled kernels requested but the extension is not built")
        return forced
    return "compiled" if _compiled is not None else "python"


def get_kernels(name: str | None = None):
    """Return the kernel module for ``name`` (default: best available)."""
    if name is None:
        name = default_backend()
    if name == "python":
        return _kernels_py
    if name == "compiled":
        if _compiled is None:
            raise ValueError("compiled kernels are not available in this install")
        return _compiled
    raise ValueError(f"unknown backend {name!r}")

"""Wall-time benchmarks: basis construction per kernel backend, and the
projector-oracle route for comparison."""

from __future__ import annotations

import time
from statistics import median

from .arith import make_context
from .backend import available_backends
from .oscillator import build_basis
from .verify import _EIGS, dft_matrix, spectral_projector


def _time(fn, reps: int) -> list[float]:
    out = []
    for _ in range(reps):
        start = time.perf_counter()
        fn()
        out.append(time.perf_counter() - start)
    return out


def run_bench(primes: list[int], reps: int = 3) -> list[dict]:
    """One row per (prime, route); basis rows exist per available backend."""
    rows = []
    for p in primes:
        ctx = make_context(p)
        for backend in available_backends():
            times = _time(lambda: build_basis(ctx, backend=backend), reps)
            rows.append(
                {
                    "p": p,
                    "route": "build_basis",
                    "backend": backend,
                    "reps": reps,
                    "median_s": median(times),
                    "best_s": min(times),
                }
            )

        def projector_route():
            f = dft_matrix(p)
            f2 = f @ f
            powers = (f2, f2 @ f)
            for lam in _EIGS:
                spectral_projector(f, lam, powers=powers).trace()

        times = _time(projector_route, reps)
        rows.append(
            {
                "p": p,
                "route": "projector_oracle",
                "backend": "-",
                "reps": reps,
                "median_s": median(times),
                "best_s": min(times),
            }
        )
    return rows

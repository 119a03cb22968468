"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

import time

import numpy as np
import pytest

from oscbasis import (
    SL2Element,
    build_basis,
    conjugator,
    element_order,
    gauss_sum,
    legendre_symbol,
    pi_matrix,
    psi_matrix,
    psi_vector,
    rho_fourier,
    rho_matrix,
    run_full_suite,
    sl2_act_on_h,
    sl2_mul,
    spectral_projector,
    torus_eigenvalue,
    torus_generator,
    torus_membership,
)
from oscbasis.heisenberg import random_heisenberg
from oscbasis.weil import random_sl2

from conftest import PRIMES_LE_101

EIGS = (1, -1j, -1, 1j)
SEED = 20240501


def _report(num, name, ok, detail):
    print(f"[criterion {num:02d}] {name}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok


def test_criterion_01_diagonalization(ctx_for):
    start = time.perf_counter()
    worst, worst_p = 0.0, None
    for p in PRIMES_LE_101:
        ctx = ctx_for(p)
        basis = build_basis(ctx)
        f = rho_fourier(ctx)
        d = basis.dft_eigenvalues
        resid = np.linalg.norm(f @ basis.matrix - basis.matrix * d[None, :])
        if resid > worst:
            worst, worst_p = resid, p
        assert resid < 1e-12 * p, f"p={p} residual {resid}"
    elapsed = time.perf_counter() - start
    ok = elapsed < 2.0
    _report(1, "dft diagonalization, all p <= 101", ok,
            f"worst residual {worst:.3e} at p={worst_p}, {elapsed:.2f}s total")


def test_criterion_02_orthonormality(ctx_for):
    worst = 0.0
    for p in PRIMES_LE_101:
        basis = build_basis(ctx_for(p))
        resid = np.linalg.norm(basis.matrix.conj().T @ basis.matrix - np.eye(p))
        worst = max(worst, resid)
        assert resid < 1e-12 * p, f"p={p} residual {resid}"
    _report(2, "basis orthonormality, all p <= 101", True,
            f"worst residual {worst:.3e}")


def test_criterion_03_eigenvalue_multiplicities(ctx_for):
    for p in (5, 13, 17, 29, 101):
        m = (p - 1) // 4
        expected = {1: m + 1, -1j: m, -1: m, 1j: m}
        basis = build_basis(ctx_for(p))
        counts = {lam: 0 for lam in EIGS}
        for rec in basis.records:
            counts[rec.dft_eigenvalue] += 1
        assert counts == expected, f"p={p} counts {counts}"
        # independent confirmation through the projector oracle
        f = rho_fourier(ctx_for(p))
        f2 = f @ f
        powers = (f2, f2 @ f)
        traces = {
            lam: round(spectral_projector(f, lam, powers=powers).trace().real)
            for lam in EIGS
        }
        assert traces == expected, f"p={p} traces {traces}"
    _report(3, "eigenvalue multiplicities (m+1, m, m, m)", True,
            "counts and projector traces agree at p in {5,13,17,29,101}")


def test_criterion_04_intertwining(ctx_for):
    worst = 0.0
    for p in (5, 13, 29):
        ctx = ctx_for(p)
        rng = np.random.default_rng(SEED)
        f = rho_fourier(ctx)
        for _ in range(100):
            g = random_sl2(ctx, rng)
            h = random_heisenberg(ctx, rng)
            r = rho_matrix(ctx, g, fourier=f)
            lhs = r @ pi_matrix(ctx, h) @ r.conj().T
            resid = np.linalg.norm(lhs - pi_matrix(ctx, sl2_act_on_h(g, h)))
            worst = max(worst, resid)
        assert worst < 1e-10, f"p={p} worst {worst}"
    _report(4, "intertwining, 100 seeded pairs at p in {5,13,29}", True,
            f"max residual {worst:.3e} < 1e-10")


def test_criterion_05_homomorphism(ctx_for):
    worst = 0.0
    for p in (5, 13, 29):
        ctx = ctx_for(p)
        rng = np.random.default_rng(SEED)
        f = rho_fourier(ctx)
        for _ in range(100):
            g1, g2 = random_sl2(ctx, rng), random_sl2(ctx, rng)
            lhs = rho_matrix(ctx, sl2_mul(g1, g2), fourier=f)
            rhs = rho_matrix(ctx, g1, fourier=f) @ rho_matrix(ctx, g2, fourier=f)
            worst = max(worst, np.linalg.norm(lhs - rhs))
        assert worst < 1e-10, f"p={p} worst {worst}"
    _report(5, "rho homomorphism, 100 seeded pairs at p in {5,13,29}", True,
            f"max residual {worst:.3e} < 1e-10")


def test_criterion_06_torus_generator(ctx_for):
    worst = 0.0
    for p in (5, 13, 17, 29, 101):
        ctx = ctx_for(p)
        t = torus_generator(ctx)
        assert torus_membership(t), f"p={p}"
        assert element_order(t) == p - 1, f"p={p}"
        f = rho_fourier(ctx)
        rt = rho_matrix(ctx, t, fourier=f)
        resid = np.linalg.norm(rt @ f - f @ rt)
        worst = max(worst, resid)
        assert resid < 1e-11, f"p={p} commutator {resid}"
    assert torus_generator(ctx_for(5)) == SL2Element(5, 0, 1, 4, 0)
    _report(6, "torus generator: membership, order p-1, commutes with F", True,
            f"max commutator {worst:.3e} < 1e-11; t(5) = [[0,1],[4,0]]")


def test_criterion_07_scale_eigenvectors(ctx_for):
    worst_eig, worst_gram = 0.0, 0.0
    for p in (5, 13, 29):
        ctx = ctx_for(p)
        f = rho_fourier(ctx)
        from oscbasis.weil import scale_element

        sa = rho_matrix(ctx, scale_element(p, ctx.a), fourier=f)
        for x in range(p):
            v = psi_vector(ctx, x)
            lam = torus_eigenvalue(ctx, x)
            worst_eig = max(worst_eig, np.linalg.norm(sa @ v - lam * v))
        gram = psi_matrix(ctx).conj().T @ psi_matrix(ctx)
        off = gram - np.diag(np.diag(gram))
        worst_gram = max(worst_gram, float(np.abs(off).max()))
    ok = worst_eig < 1e-11 and worst_gram < 1e-11
    _report(7, "psi_x eigenvectors of the scale operator, pairwise orthogonal", ok,
            f"max eigen residual {worst_eig:.3e}, max off-diagonal {worst_gram:.3e}")


def test_criterion_08_conjugation_route(ctx_for):
    for p in (5, 13):
        ctx = ctx_for(p)
        basis = build_basis(ctx)
        f = rho_fourier(ctx)
        image = rho_matrix(ctx, conjugator(ctx), fourier=f) @ psi_matrix(ctx)
        c = np.array([np.vdot(basis.matrix[:, x], image[:, x]) for x in range(p)])
        assert np.abs(c - c[0]).max() < 1e-10, f"p={p} scalar varies"
        assert abs(abs(c[0]) - 1.0) < 1e-10
        assert abs(c[0].imag) < 1e-10  # real
        assert min(abs(c[0] - 1.0), abs(c[0] + 1.0)) < 1e-10  # +-1
    _report(8, "conjugation route rho(s) psi_x = c phi_x", True,
            "single real sign c, constant across x, at p in {5,13}")


def test_criterion_09_gauss_sum_law(ctx_for):
    worst = 0.0
    for p in (5, 13, 17, 29):
        ctx = ctx_for(p)
        for c in range(1, p):
            resid = abs(gauss_sum(ctx, c) - legendre_symbol(ctx, c) * np.sqrt(p))
            worst = max(worst, resid)
        assert worst < 1e-11, f"p={p} worst {worst}"
    _report(9, "gauss sum law sum eta^(c t^2) = sigma(c) sqrt(p)", True,
            f"max residual {worst:.3e} < 1e-11")


def test_criterion_10_scaling_smoke(ctx_for):
    start = time.perf_counter()
    report = run_full_suite(ctx_for(1009))
    elapsed = time.perf_counter() - start
    failed = [c.name for c in report.checks if not c.passed]
    ok = report.passed and elapsed < 60.0
    _report(10, "full suite at p = 1009 under 60 s", ok,
            f"{len(report.checks)} checks, tol {report.tolerance:.3g}, "
            f"{elapsed:.1f}s, failed: {failed or 'none'}")

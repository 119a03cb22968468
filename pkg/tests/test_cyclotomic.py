import cmath

import numpy as np
import pytest

from oscbasis import (
    LengthMismatchError,
    ZeroArgumentError,
    eta_table,
    gauss_sum,
    gauss_sum_table,
    inner_product,
    legendre_symbol,
    root_power,
    root_table,
    theta_table,
)


def test_root_power_examples(ctx_for):
    eta = eta_table(ctx_for(5))
    theta = theta_table(ctx_for(5))
    assert root_power(eta, 0) == 1.0  # exact
    assert root_power(theta, 1) == pytest.approx(1j)  # theta = i when p-1 = 4
    assert root_power(eta, 7) == root_power(eta, 2)  # periodicity mod 5
    assert root_power(eta, -3) == root_power(eta, 2)


@pytest.mark.parametrize("order", [4, 12, 100, 1008, 1009])
def test_root_table_invariants(order):
    table = root_table(order)
    assert table.values[0] == 1.0
    assert np.abs(np.abs(table.values) - 1.0).max() < 1e-14
    # group law on a few exponent pairs
    rng = np.random.default_rng(0)
    for j, m in rng.integers(0, order, (20, 2)):
        prod = table.values[j] * table.values[m]
        assert prod == pytest.approx(table.values[(j + m) % order], abs=1e-13)


def _gauss_oracle(p, c):
    # independent direct summation, pure cmath
    return sum(cmath.exp(2j * cmath.pi * ((c * t * t) % p) / p) for t in range(p))


def test_gauss_sum_examples(ctx_for):
    assert gauss_sum(ctx_for(5), 1) == pytest.approx(np.sqrt(5))
    assert gauss_sum(ctx_for(5), 2) == pytest.approx(-np.sqrt(5))
    assert gauss_sum(ctx_for(13), 1) == pytest.approx(np.sqrt(13))
    with pytest.raises(ZeroArgumentError):
        gauss_sum(ctx_for(5), 0)


@pytest.mark.parametrize("p", [5, 13, 17, 29])
def test_gauss_sum_law_all_residues(ctx_for, p):
    ctx = ctx_for(p)
    for c in range(1, p):
        value = gauss_sum(ctx, c)
        assert value == pytest.approx(_gauss_oracle(p, c), abs=1e-12)
        assert abs(value - legendre_symbol(ctx, c) * np.sqrt(p)) < 1e-11


@pytest.mark.parametrize("p", [5, 29, 101])
def test_gauss_sum_table_matches_scalar(ctx_for, p):
    ctx = ctx_for(p)
    table = gauss_sum_table(ctx)
    for c in range(1, p):
        assert table[c - 1] == pytest.approx(gauss_sum(ctx, c), abs=1e-12)


def test_inner_product_standard_basis():
    d0 = np.zeros(5, dtype=complex)
    d0[0] = 1.0
    d1 = np.zeros(5, dtype=complex)
    d1[1] = 1.0
    assert inner_product(d0, d0) == 1.0
    assert inner_product(d0, d1) == 0.0
    v = np.exp(1j * np.linspace(0, 1, 5)) / np.sqrt(5)
    assert inner_product(v, v) == pytest.approx(1.0)
    with pytest.raises(LengthMismatchError):
        inner_product(d0, np.zeros(7, dtype=complex))


def test_matrix_application_is_linear():
    rng = np.random.default_rng(3)
    m = rng.standard_normal((7, 7)) + 1j * rng.standard_normal((7, 7))
    u = rng.standard_normal(7) + 1j * rng.standard_normal(7)
    v = rng.standard_normal(7) + 1j * rng.standard_normal(7)
    alpha, beta = 0.7 - 0.2j, -1.3 + 0.5j
    lhs = m @ (alpha * u + beta * v)
    rhs = alpha * (m @ u) + beta * (m @ v)
    np.testing.assert_allclose(lhs, rhs, atol=1e-12)

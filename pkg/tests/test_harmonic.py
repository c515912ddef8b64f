"""Kernel pair, Gauss sums, Poisson residuals, oscillatory integrals."""

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sievelab import (gauss_sum, gauss_sum_row, linear_phase_integral,
                      oscillatory_integral, phi_hat_value, phi_value,
                      poisson_residual)
from sievelab.errors import NotCoprimeError, QuadratureError
from sievelab.harmonic import phi_hat_by_quadrature, phi_pair


def test_kernel_special_values():
    assert phi_value(0.0) == math.pi**2 / 4
    assert phi_value(0.5) == 1.0
    assert phi_value(-0.5) == 1.0
    assert phi_hat_value(0.0) == math.pi**2 / 4
    assert phi_hat_value(1.0) == 0.0
    assert phi_hat_value(-2.5) == 0.0
    assert phi_hat_value(0.5) == math.pi**2 / 8


def test_kernel_dominates_one_on_the_core_window():
    xs = np.linspace(-0.5, 0.5, 1001)
    assert np.all(phi_value(xs) >= 1.0 - 1e-12)


def test_kernel_is_nonnegative_everywhere_sampled():
    xs = np.linspace(-20, 20, 5001)
    assert np.all(phi_value(xs) >= 0.0)


def test_kernel_pair_is_consistent():
    for x in (0.0, 0.3, 1.7, -2.2):
        v, h = phi_pair(x)
        assert v == phi_value(x)
        assert h == phi_hat_value(x)


@pytest.mark.parametrize("s", [0.0, 0.25, -0.25, 0.5, -0.5, 0.99, -0.99,
                               1.5, -1.5])
def test_transform_matches_quadrature(s):
    assert abs(phi_hat_by_quadrature(s) - phi_hat_value(s)) <= 1e-6


def test_gauss_sum_small_cases():
    assert gauss_sum(1, 0, 1) == 1.0 + 0j
    assert gauss_sum(1, 0, 4) == 2 + 2j
    assert abs(gauss_sum(1, 0, 3) - complex(0, math.sqrt(3))) < 1e-12
    with pytest.raises(NotCoprimeError):
        gauss_sum(2, 1, 4)


def test_gauss_sum_magnitude_cap_small_sweep():
    for c in range(1, 101):
        cap = math.sqrt(2 * c) + 1e-9
        for k in range(1, c + 1):
            if math.gcd(k, c) != 1:
                continue
            row = gauss_sum_row(k, c)
            assert row.shape == (c,)
            assert float(np.max(np.abs(row))) <= cap


def test_gauss_row_agrees_with_single_sums():
    for c, k in ((7, 3), (12, 5), (25, 4), (64, 63)):
        row = gauss_sum_row(k, c)
        for l in (0, 1, c // 2, c - 1):
            want = sum(cmath.exp(2j * cmath.pi * ((k * d * d + l * d) % c) / c)
                       for d in range(1, c + 1))
            assert abs(row[l] - want) <= 1e-9
            assert abs(gauss_sum(k, l, c) - want) <= 1e-9


def test_poisson_residual_on_reference_points():
    for scale, shift in ((1.0, 0.0), (0.5, 0.25), (1 / 3, 0.7), (0.8, 1.0)):
        assert poisson_residual(scale, shift) <= 1e-6


def test_zero_frequency_integral_is_the_length():
    for q0 in (1.0, 17.5, 400.0):
        assert oscillatory_integral(0, 0, 1, 0.3, q0) == q0


@settings(max_examples=40, deadline=None)
@given(st.integers(-15, 15), st.floats(1e-5, 0.02), st.floats(10.0, 500.0))
def test_linear_phase_matches_closed_form(j, z, q0):
    if j == 0:
        return
    got = oscillatory_integral(j, 0, 1, z, q0)
    want = linear_phase_integral(j, z, q0)
    assert abs(got - want) <= 1e-6 * q0


def test_mixed_phase_integral_obeys_trivial_cap():
    for j, l, r_star, z, q0 in ((3, 7, 2, 0.01, 120.0), (-2, 9, 1, 0.005, 60.0),
                                (5, -12, 3, 0.02, 300.0)):
        val = abs(oscillatory_integral(j, l, r_star, z, q0))
        assert val <= q0 * (1 + 1e-9)


def test_quadrature_refuses_unreachable_tolerance():
    with pytest.raises(QuadratureError):
        oscillatory_integral(3, 11, 1, 0.07, 50.0, tol=1e-300)


def test_pure_sqrt_phase_decays_with_frequency():
    lo = abs(oscillatory_integral(0, 40, 1, 0.0, 200.0))
    hi = abs(oscillatory_integral(0, 2, 1, 0.0, 200.0))
    assert lo < hi

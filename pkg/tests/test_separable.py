"""Separable-state geometry: overlaps, bounds, energy gap, witness."""

import math

import numpy as np
import pytest

from entgap.model import (
    CORRELATION_ENERGY_SUP,
    correlation_energy,
    hf_overlap,
    params_from_K,
    params_from_chi,
)
from entgap.separable import (
    GaussianSeparableState,
    WavepacketCoefficients,
    a_low,
    a_low_quadratic_coefficient,
    gaussian_energy_gap,
    gaussian_overlap,
    generalized_overlap,
    max_overlap,
    witness_expectation_ground,
)

CHI_GRID = np.linspace(0.05, 0.999, 30)


class TestGaussianOverlap:
    def test_decoupled_identity(self):
        assert gaussian_overlap(params_from_chi(1.0), 1.0) == pytest.approx(
            1.0, abs=1e-15
        )

    def test_maximum_at_natural_orbital_exponent(self):
        p = params_from_chi(0.5)
        # 64 chi^3/(chi+1)^6 = 8/1.5^6, by hand
        assert gaussian_overlap(p, 0.5) == pytest.approx(8.0 / 1.5**6, abs=1e-15)
        assert max_overlap(p) == pytest.approx(gaussian_overlap(p, p.chi), abs=1e-15)
        for eps in (1e-4, -1e-4):
            assert gaussian_overlap(p, 0.5 + eps) < gaussian_overlap(p, 0.5)

    def test_reduces_to_hf_overlap(self):
        for chi in CHI_GRID:
            p = params_from_chi(float(chi))
            assert gaussian_overlap(p, math.sqrt(1.0 - p.K)) == pytest.approx(
                hf_overlap(p), abs=1e-12
            )

    def test_overlap_ordering(self):
        for chi in CHI_GRID[:-1]:
            p = params_from_chi(float(chi))
            assert hf_overlap(p) <= max_overlap(p) < 1.0

    def test_rejects_nonpositive_exponent(self):
        with pytest.raises(ValueError):
            gaussian_overlap(params_from_chi(0.5), 0.0)
        with pytest.raises(ValueError):
            GaussianSeparableState(a=-1.0)


class TestALow:
    def test_decoupled_degenerate_bracket(self):
        assert a_low(params_from_chi(1.0)) == 1.0

    def test_residual_at_root(self):
        for chi in (0.2, 0.5, 0.8):
            p = params_from_chi(chi)
            root = a_low(p)
            assert abs(gaussian_overlap(p, root) - hf_overlap(p)) < 1e-12

    def test_interval_containment(self):
        for chi in CHI_GRID[:-1]:
            p = params_from_chi(float(chi))
            assert a_low(p) < p.chi < math.sqrt(1.0 - p.K)

    def test_small_coupling_quadratic_coefficient(self):
        # a_low ~ gamma chi^2; the limit constant is sqrt(2), derived by
        # matching the chi -> 0 asymptotics of both overlap expressions
        gamma = a_low_quadratic_coefficient(1e-3)
        assert gamma == pytest.approx(math.sqrt(2.0), rel=1e-2)
        # consistency between two probe couplings
        assert a_low_quadratic_coefficient(3e-3) == pytest.approx(gamma, rel=2e-2)


class TestGeneralizedOverlap:
    def test_pure_gaussian_coefficients(self):
        p = params_from_chi(0.5)
        w = WavepacketCoefficients.from_lists([[1.0], [1.0], [1.0]])
        assert generalized_overlap(p, w) == pytest.approx(max_overlap(p), abs=1e-14)

    def test_never_exceeds_maximum(self, random_coeff_lists):
        rng = np.random.default_rng(11)
        for _ in range(100):
            chi = float(rng.uniform(0.1, 0.999))
            p = params_from_chi(chi)
            lists = random_coeff_lists(rng, max_len=7)
            w = WavepacketCoefficients.from_lists(lists)
            assert generalized_overlap(p, w) <= max_overlap(p) * (1 + 1e-13)

    def test_axis_factors_bounded(self):
        # each axis factor (overlap ratio per added axis) lies in [0, 1]
        rng = np.random.default_rng(23)
        p = params_from_chi(0.37)
        t = (p.chi - 1.0) / (p.chi + 1.0)
        for _ in range(1000):
            k = int(rng.integers(1, 7))
            coeffs = rng.normal(size=k) + 1j * rng.normal(size=k)
            num = sum(
                2.0**j * math.factorial(j) * c * c * t**j
                for j, c in enumerate(coeffs)
            )
            den = sum(
                2.0**j * math.factorial(j) * abs(c) ** 2
                for j, c in enumerate(coeffs)
            )
            factor = abs(num) ** 2 / den**2
            assert -1e-15 <= factor <= 1.0 + 1e-13

    def test_decoupled_first_excited_kills_overlap(self):
        # at chi = 1 the deformation factor keeps only j = 0; a pure
        # j = 1 packet is orthogonal to the ground state
        p = params_from_chi(1.0)
        w = WavepacketCoefficients.from_lists([[0.0, 1.0]] * 3)
        assert generalized_overlap(p, w) == pytest.approx(0.0, abs=1e-15)

    def test_rejects_empty_axis(self):
        with pytest.raises(ValueError):
            WavepacketCoefficients.from_lists([[0.0], [1.0], [1.0]])


class TestEnergyGap:
    def test_hf_point_is_flat(self):
        for K in (0.0, 0.2, 0.45):
            p = params_from_K(K)
            assert gaussian_energy_gap(p, math.sqrt(1.0 - K)) == pytest.approx(
                0.0, abs=1e-15
            )

    def test_hand_value(self):
        # K = 0, a = 2: 3 (2-1)^2 / 4 = 3/4
        assert gaussian_energy_gap(params_from_K(0.0), 2.0) == pytest.approx(
            0.75, abs=1e-15
        )

    def test_nonnegative_everywhere(self):
        for K in (0.1, 0.3, 0.49):
            p = params_from_K(K)
            for a in np.geomspace(1e-3, 50.0, 40):
                assert gaussian_energy_gap(p, float(a)) >= 0.0

    def test_max_overlap_state_costs_energy(self):
        for K in (0.1, 0.3, 0.49):
            p = params_from_K(K)
            assert gaussian_energy_gap(p, p.chi) > 0.0

    def test_rejects_nonpositive_exponent(self):
        with pytest.raises(ValueError):
            gaussian_energy_gap(params_from_K(0.1), -0.5)


class TestWitness:
    def test_zero_coupling(self):
        assert witness_expectation_ground(params_from_K(0.0)) == 0.0

    def test_equals_minus_correlation_energy(self):
        for K in (0.1, 0.25, 0.45):
            p = params_from_K(K)
            assert witness_expectation_ground(p) == -correlation_energy(p)

    def test_quarter_coupling(self):
        assert witness_expectation_ground(params_from_K(0.25)) == pytest.approx(
            -0.037416039573494654, abs=1e-14
        )

    def test_degenerate_limit(self):
        assert witness_expectation_ground(params_from_K(0.5 - 1e-12)) == pytest.approx(
            -CORRELATION_ENERGY_SUP, abs=1e-5
        )

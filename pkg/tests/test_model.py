"""Model-point construction and exact/mean-field energetics."""

import math

import numpy as np
import pytest

from entgap.model import (
    CORRELATION_ENERGY_SUP,
    chi_from_correlation_energy,
    correlation_energy,
    energy_level,
    hf_energy,
    hf_overlap,
    params_from_K,
    params_from_chi,
)

K_GRID = np.linspace(0.0, 0.499, 100)


class TestCouplingParams:
    def test_decoupled_limit(self):
        p = params_from_K(0.0)
        assert p.chi == 1.0
        assert p.zeta == 0.0
        assert p.beta == 0.0

    def test_chi_at_three_eighths(self):
        # (1 - 3/4)^(1/4) = 2^(-1/2), by direct arithmetic
        assert params_from_K(0.375).chi == pytest.approx(0.25**0.25, abs=1e-15)
        assert params_from_K(0.375).chi == pytest.approx(2.0**-0.5, abs=1e-15)

    def test_chi_near_breakdown(self):
        # (0.02)^(1/4), frozen from a 40-digit evaluation
        assert params_from_K(0.49).chi == pytest.approx(0.37606030930863936, abs=1e-16)

    @pytest.mark.parametrize("K", [-1e-9, -1.0, 0.5, 0.7])
    def test_rejects_illegal_K(self, K):
        with pytest.raises(ValueError):
            params_from_K(K)

    @pytest.mark.parametrize("chi", [0.0, -0.3, 1.0 + 1e-9])
    def test_rejects_illegal_chi(self, chi):
        with pytest.raises(ValueError):
            params_from_chi(chi)

    def test_round_trip_K(self):
        for K in K_GRID:
            p = params_from_K(float(K))
            back = 0.5 * (1.0 - p.chi**4)
            assert back == pytest.approx(float(K), rel=1e-14, abs=1e-15)

    def test_derived_field_ranges(self):
        for K in K_GRID:
            p = params_from_K(float(K))
            assert 0.0 < p.chi <= 1.0
            assert 0.0 <= p.zeta < 1.0
            assert 0.0 <= p.beta < 0.25
            assert p.zeta == pytest.approx(
                (1 - p.chi**2) / (1 + p.chi**2), abs=1e-15
            )


class TestSpectrum:
    def test_decoupled_ground_state(self):
        assert energy_level(params_from_K(0.0), 0, 0) == pytest.approx(3.0, abs=1e-15)

    def test_ground_state_at_three_eighths(self):
        # chi^2 = 1/2 substituted by hand: 3/2 (1 + 1/2) = 9/4
        assert energy_level(params_from_K(0.375), 0, 0) == pytest.approx(2.25, abs=1e-14)

    def test_decoupled_excited(self):
        # chi = 1 makes both quantum numbers unit-spaced: 3 + 1 + 2
        assert energy_level(params_from_K(0.0), 1, 2) == pytest.approx(6.0, abs=1e-15)

    def test_rejects_negative_quanta(self):
        p = params_from_K(0.1)
        with pytest.raises(ValueError):
            energy_level(p, -1, 0)
        with pytest.raises(ValueError):
            energy_level(p, 0, -2)


class TestMeanField:
    def test_hf_energy_values(self):
        assert hf_energy(params_from_K(0.0)) == pytest.approx(3.0, abs=1e-15)
        assert hf_energy(params_from_K(0.25)) == pytest.approx(
            2.5980762113533159, abs=1e-14
        )
        # K -> 1/2 limit: 3/sqrt(2)
        assert hf_energy(params_from_K(0.5 - 1e-12)) == pytest.approx(
            3.0 / math.sqrt(2.0), abs=1e-6
        )

    def test_correlation_energy_values(self):
        assert correlation_energy(params_from_K(0.0)) == 0.0
        assert correlation_energy(params_from_K(0.25)) == pytest.approx(
            0.037416039573494654, abs=1e-14
        )
        # degenerate limit approaches (3/2)(sqrt(2) - 1)
        assert correlation_energy(params_from_K(0.5 - 1e-12)) == pytest.approx(
            CORRELATION_ENERGY_SUP, abs=1e-5
        )

    def test_correlation_energy_monotone_nonnegative(self):
        vals = [correlation_energy(params_from_K(float(K))) for K in K_GRID]
        assert all(v >= 0.0 for v in vals)
        assert all(b > a for a, b in zip(vals, vals[1:]))

    def test_ritz_bound(self):
        for K in K_GRID:
            p = params_from_K(float(K))
            gap = hf_energy(p) - energy_level(p, 0, 0)
            assert gap >= 0.0
            if K > 0:
                assert gap > 0.0

    def test_hf_overlap_values(self):
        assert hf_overlap(params_from_K(0.0)) == pytest.approx(1.0, abs=1e-14)
        assert hf_overlap(params_from_K(0.25)) == pytest.approx(
            0.97712712031189891, abs=1e-14
        )
        assert hf_overlap(params_from_K(0.5 - 1e-14)) < 1e-8

    def test_hf_overlap_monotone_decreasing(self):
        vals = [hf_overlap(params_from_K(float(K))) for K in K_GRID]
        assert all(a > b for a, b in zip(vals, vals[1:]))
        assert all(0.0 < v <= 1.0 for v in vals)


class TestEnergyInversion:
    def test_zero_energy(self):
        assert chi_from_correlation_energy(0.0) == pytest.approx(1.0, abs=1e-15)

    def test_quarter_coupling_point(self):
        # E_corr(K = 1/4) must map back to chi = (1/2)^(1/4)
        E = correlation_energy(params_from_K(0.25))
        assert chi_from_correlation_energy(E) == pytest.approx(0.5**0.25, abs=1e-12)

    def test_degenerate_limit(self):
        assert chi_from_correlation_energy(CORRELATION_ENERGY_SUP - 1e-9) < 6e-3

    def test_round_trip_grid(self):
        # conditioning: inverting near the degenerate endpoint loses
        # ~chi^-3 digits, so the grid avoids the singular corner
        for chi in np.linspace(0.02, 1.0, 50):
            E = correlation_energy(params_from_chi(float(chi)))
            assert chi_from_correlation_energy(E) == pytest.approx(
                float(chi), abs=1e-10
            )

    @pytest.mark.parametrize("E", [-1e-12, CORRELATION_ENERGY_SUP, 1.0])
    def test_rejects_out_of_range(self, E):
        with pytest.raises(ValueError):
            chi_from_correlation_energy(E)

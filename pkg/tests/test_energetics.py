"""Partition function, cumulants, Ohmic comparison, moment estimators."""

import math

import numpy as np
import pytest

from entgap.energetics import (
    beta_from_chi,
    cumulants,
    ohmic_uncertainties,
    partition_function,
    purity_from_energy_moments,
    second_cumulant_sweep,
    slope_fit,
    slope_ratio_R,
)
from entgap.entanglement import UncertaintyPair, purity, uncertainties
from entgap.model import params_from_chi
from entgap.oracle import cumulants_from_distribution
from entgap.distributions import legendre_distribution

MINIMAL = UncertaintyPair(0.5, 0.5)

# frozen 40-digit evaluations
OHMIC_QUARTER = (0.43332938898969776, 0.74563101480569941)


class TestPartitionFunction:
    def test_unit_at_zero(self):
        for dq2, dp2 in ((0.5, 0.5), (1.25, 0.3125), (2.0, 1.0)):
            assert partition_function(UncertaintyPair(dq2, dp2), 0.0) == 1.0

    def test_minimal_packet_is_ground_state(self):
        # bracket collapses to e^xi, so Z = e^{-3 xi/2}
        for xi in (0.2, 1.0, 3.0):
            assert partition_function(MINIMAL, xi) == pytest.approx(
                math.exp(-1.5 * xi), rel=1e-14
            )

    def test_matches_level_sum(self):
        u = uncertainties(params_from_chi(0.5))
        probs = legendre_distribution(u, truncation_tol=1e-14).probs
        for xi in (0.5, 1.0, 2.0):
            levels = np.arange(probs.size) + 0.5
            summed = float(np.sum(probs * np.exp(-xi * levels))) ** 3
            assert partition_function(u, xi) == pytest.approx(summed, abs=1e-8)

    def test_rejects_negative_time(self):
        with pytest.raises(ValueError):
            partition_function(MINIMAL, -0.1)


class TestCumulants:
    def test_minimal_packet_exact(self):
        series = cumulants(MINIMAL, 8)
        assert series[1] == 1.5
        # rational series arithmetic: the higher cumulants vanish exactly
        assert np.all(series.values[1:] == 0.0)

    def test_first_cumulant_is_mean_energy(self):
        for chi in (0.2, 0.5, 0.9):
            u = uncertainties(params_from_chi(chi))
            assert cumulants(u, 1)[1] == pytest.approx(
                1.5 * (u.dq2 + u.dp2), rel=1e-15
            )

    def test_second_cumulant_closed_form(self):
        # k2 = (3/2)(dq2^2 + dp2^2 - 1/2), from the xi^2 log coefficient
        u = uncertainties(params_from_chi(0.5))
        assert cumulants(u, 2)[2] == pytest.approx(
            1.5 * (u.dq2**2 + u.dp2**2 - 0.5), rel=1e-14
        )
        assert cumulants(u, 2)[2] == pytest.approx(1.740234375, abs=1e-12)

    def test_matches_moment_sum_oracle(self):
        for chi in np.linspace(0.1, 0.99, 10):
            u = uncertainties(params_from_chi(float(chi)))
            taylor = cumulants(u, 6).values
            probs = legendre_distribution(u, truncation_tol=1e-14).probs
            moment = cumulants_from_distribution(probs, 6)
            scale = np.maximum(1.0, np.abs(taylor))
            assert np.max(np.abs(taylor - moment) / scale) < 1e-8

    def test_leading_order_law(self):
        # values[n] -> (3/2)(n-1)! (dq2^n + dp2^n) as dq2 grows
        n = 5
        devs = []
        for dq2 in (10.0, 100.0, 1000.0):
            u = UncertaintyPair(dq2, 0.5)
            lead = 1.5 * math.factorial(n - 1) * (u.dq2**n + u.dp2**n)
            devs.append(abs(cumulants(u, n)[n] / lead - 1.0))
        assert all(b < a for a, b in zip(devs, devs[1:]))
        assert devs[-1] < 1e-5

    def test_order_bounds(self):
        with pytest.raises(ValueError):
            cumulants(MINIMAL, 0)
        with pytest.raises(ValueError):
            cumulants(MINIMAL, 21)

    def test_series_indexing(self):
        series = cumulants(MINIMAL, 3)
        with pytest.raises(IndexError):
            series[0]
        with pytest.raises(IndexError):
            series[4]


class TestOhmicUncertainties:
    def test_free_oscillator(self):
        u = ohmic_uncertainties(0.0, 10.0)
        assert (u.dq2, u.dp2) == (0.5, 0.5)

    def test_quarter_coupling_frozen(self):
        u = ohmic_uncertainties(0.25, 10.0)
        assert u.dq2 == pytest.approx(OHMIC_QUARTER[0], abs=1e-14)
        assert u.dp2 == pytest.approx(OHMIC_QUARTER[1], abs=1e-14)

    def test_heisenberg_over_coupling_range(self):
        for beta in np.linspace(0.0, 0.99, 50):
            u = ohmic_uncertainties(float(beta), 10.0)
            assert u.product >= 0.25 - 1e-12

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            ohmic_uncertainties(1.0, 10.0)
        with pytest.raises(ValueError):
            ohmic_uncertainties(-0.1, 10.0)
        with pytest.raises(ValueError):
            ohmic_uncertainties(0.2, 0.9)

    def test_low_cutoff_violates_heisenberg(self):
        # below cutoff_ratio = e the underdamped variances dip under 1/4
        with pytest.raises(ValueError):
            ohmic_uncertainties(0.05, 1.5)


class TestBetaFromChi:
    def test_endpoints(self):
        assert beta_from_chi(1.0) == 0.0
        assert beta_from_chi(1e-6) == pytest.approx(0.25, abs=1e-10)

    def test_hand_value(self):
        # chi = 2^(-1/2): (1 - 1/4)^2 / (4 * 5/4) = 0.1125
        assert beta_from_chi(2.0**-0.5) == pytest.approx(0.1125, abs=1e-15)

    def test_monotone_decreasing(self):
        grid = np.linspace(0.01, 1.0, 60)
        vals = [beta_from_chi(float(c)) for c in grid]
        assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            beta_from_chi(0.0)
        with pytest.raises(ValueError):
            beta_from_chi(1.1)


class TestSlopeRatio:
    def test_frozen_midpoint(self):
        assert slope_ratio_R(0.5) == pytest.approx(0.5217433797770408, abs=1e-9)

    def test_distinguishable_at_both_ends(self):
        assert slope_ratio_R(0.05) > 0.7
        assert slope_ratio_R(0.95) > 1.0

    def test_dips_below_half_in_between(self):
        grid = np.linspace(0.55, 0.8, 8)
        assert min(slope_ratio_R(float(c)) for c in grid) < 0.5

    def test_log_cumulants_approximately_linear(self):
        # the fit residual is reported, not asserted against a bound
        u = uncertainties(params_from_chi(0.3))
        slope, resid = slope_fit(cumulants(u, 8).values)
        assert slope > 0.0
        assert resid < 1.0

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            slope_ratio_R(1.0)
        with pytest.raises(ValueError):
            slope_ratio_R(0.5, N=2)

    def test_nonpositive_cumulants_rejected_by_fit(self):
        with pytest.raises(ValueError):
            slope_fit(np.array([1.0, -0.5, 2.0]))


class TestPurityFromEnergyMoments:
    def test_ground_state(self):
        assert purity_from_energy_moments(1.5, 0.0) == pytest.approx(1.0, abs=1e-15)

    def test_chain_equals_purity(self):
        for chi in np.linspace(0.02, 0.999, 50):
            p = params_from_chi(float(chi))
            series = cumulants(uncertainties(p), 2)
            assert purity_from_energy_moments(series[1], series[2]) == pytest.approx(
                purity(p), abs=1e-10
            )

    def test_rejects_unphysical_moments(self):
        with pytest.raises(ValueError):
            purity_from_energy_moments(1.0, 0.0)
        with pytest.raises(ValueError):
            purity_from_energy_moments(2.0, 10.0)


class TestSecondCumulantSweep:
    def test_decoupled_agreement(self):
        ((_, mosh, ohm),) = second_cumulant_sweep([1.0])
        assert abs(mosh) < 1e-12
        assert abs(ohm) < 1e-12

    def test_divergence_vs_boundedness(self):
        rows = second_cumulant_sweep([0.05, 0.5])
        chi_small = rows[0]
        assert chi_small[1] > 10.0 * chi_small[2]
        assert chi_small[1] > 1e4  # pair-model column blows up
        assert chi_small[2] < 1.0  # Ohmic column stays small

    def test_row_values(self):
        ((_, mosh, _),) = second_cumulant_sweep([0.5])
        assert mosh == pytest.approx(1.740234375, abs=1e-12)

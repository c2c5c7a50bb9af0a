"""Named oracle cross-checks behind the `entgap verify` command.

Every closed form in the package is compared here against an
independent route: Gauss-Hermite quadrature for overlaps and energies,
truncated spectral sums for entropy/purity/partition traces, raw-moment
cumulants from the level distributions, and round-trip inversions.
Checks look their targets up through the module objects at call time,
so a tampered formula is caught rather than a stale reference.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import distributions as dist
from . import energetics as ener
from . import entanglement as ent
from . import model
from . import oracle
from . import separable as sep

__all__ = ["CheckResult", "run_checks", "format_report", "CHECKS"]

CHI_GRID_10 = np.linspace(0.05, 0.99, 10)
CHI_GRID_50 = np.linspace(0.02, 0.999, 50)


@dataclass(frozen=True)
class CheckResult:
    name: str
    error: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.error <= self.tolerance


def _max_over(grid, fn: Callable[[float], float]) -> float:
    return max(fn(float(x)) for x in grid)


def _random_coeff_lists(rng: np.random.Generator, max_len: int = 5):
    """Seeded per-axis complex Hermite coefficients for wavepacket draws."""
    out = []
    for _ in range(3):
        k = int(rng.integers(1, max_len))
        out.append((rng.normal(size=k) + 1j * rng.normal(size=k)).tolist())
    return out


# --- individual checks (each returns (measured_error, base_tolerance)) ----


def check_quadrature_exactness() -> tuple[float, float]:
    """Gauss-Hermite integrates x^k e^{-x^2} exactly for k <= 2n-1."""
    rule = oracle.hermite_rule(24)
    worst = 0.0
    for k in range(0, 2 * rule.order - 1, 2):
        approx = float(np.sum(rule.weights * rule.nodes**k))
        exact = math.gamma((k + 1) / 2)
        worst = max(worst, abs(approx - exact) / exact)
    return worst, 1e-12


def check_hf_overlap_quadrature() -> tuple[float, float]:
    def err(K: float) -> float:
        p = model.params_from_K(K)
        amp = oracle.overlap_quadrature(oracle.hf_state(K), oracle.GroundState(p.chi))
        return abs(abs(amp) ** 2 - model.hf_overlap(p))

    return _max_over(np.linspace(0.0, 0.49, 10), err), 1e-10


def check_gaussian_overlap_quadrature() -> tuple[float, float]:
    worst = 0.0
    for chi in (0.3, 0.6, 0.9):
        p = model.params_from_chi(chi)
        for a in (0.25, chi, 1.0, 1.7):
            amp = oracle.overlap_quadrature(
                oracle.gaussian_separable(a), oracle.GroundState(chi)
            )
            worst = max(worst, abs(abs(amp) ** 2 - sep.gaussian_overlap(p, a)))
    return worst, 1e-10


def check_generalized_overlap_quadrature() -> tuple[float, float]:
    rng = np.random.default_rng(20240811)
    worst = 0.0
    for _ in range(10):
        chi = float(rng.uniform(0.2, 0.95))
        p = model.params_from_chi(chi)
        lists = _random_coeff_lists(rng)
        w = sep.WavepacketCoefficients.from_lists(lists)
        amp = oracle.overlap_quadrature(
            oracle.wavepacket_state(chi, lists), oracle.GroundState(chi)
        )
        worst = max(worst, abs(abs(amp) ** 2 - sep.generalized_overlap(p, w)))
    return worst, 1e-10


def check_entropy_spectral_sum() -> tuple[float, float]:
    def err(chi: float) -> float:
        p = model.params_from_chi(chi)
        return abs(ent.von_neumann_entropy(p) - oracle.spectral_sum(p, "entropy"))

    return _max_over(CHI_GRID_10, err), 1e-8


def check_purity_spectral_sum() -> tuple[float, float]:
    def err(chi: float) -> float:
        p = model.params_from_chi(chi)
        return abs(ent.purity(p) - oracle.spectral_sum(p, "purity"))

    return _max_over(CHI_GRID_10, err), 1e-12


def check_purity_from_uncertainties() -> tuple[float, float]:
    def err(chi: float) -> float:
        p = model.params_from_chi(chi)
        return abs(ent.purity(p) - ent.purity_from_uncertainties(ent.uncertainties(p)))

    return _max_over(CHI_GRID_50, err), 1e-12


def check_chi_ecorr_round_trip() -> tuple[float, float]:
    def err(chi: float) -> float:
        p = model.params_from_chi(chi)
        return abs(model.chi_from_correlation_energy(model.correlation_energy(p)) - chi)

    return _max_over(CHI_GRID_50, err), 1e-10


def check_concurrence_energy_round_trip() -> tuple[float, float]:
    def err(chi: float) -> float:
        p = model.params_from_chi(chi)
        E = model.correlation_energy(p)
        back = ent.correlation_energy_from_concurrence(
            ent.concurrence_from_correlation_energy(E), "exact-root"
        )
        return abs(back - E)

    return _max_over(CHI_GRID_50, err), 1e-10


def check_distribution_cross_model() -> tuple[float, float]:
    worst = 0.0
    for chi in np.linspace(0.1, 0.9, 9):
        p = model.params_from_chi(float(chi))
        md = dist.moshinsky_diagonal(p, L=20)
        le = dist.legendre_distribution(ent.uncertainties(p), L=20)
        worst = max(worst, float(np.max(np.abs(md.probs - le.probs))))
    return worst, 1e-12


def check_distribution_normalization() -> tuple[float, float]:
    worst = 0.0
    for chi in np.linspace(0.1, 0.9, 9):
        p = model.params_from_chi(float(chi))
        worst = max(worst, abs(dist.moshinsky_diagonal(p, truncation_tol=1e-12).total() - 1.0))
        worst = max(worst, abs(
            dist.factorized_gaussian_diagonal(float(chi), truncation_tol=1e-12).total() - 1.0
        ))
    return worst, 1e-10


def check_amplitude_square_sums() -> tuple[float, float]:
    p = model.params_from_chi(0.5)
    diag = dist.moshinsky_diagonal(p, L=5)
    worst = 0.0
    for l in range(6):
        s = 0.0
        for m in range(l % 2, 160, 2):
            t = dist._pair_amplitude_1d(p, l, m)
            s += t * t
        worst = max(worst, abs(s - float(diag.probs[l])))
    return worst, 1e-8


def check_gaussian_amplitude_quadrature() -> tuple[float, float]:
    worst = 0.0
    for a in (0.3, 0.5, 1.0, 1.8):
        for l in (0, 2, 4, 6):
            amp = oracle.axis_overlap(oracle.oscillator_axis(l), oracle.gaussian_axis(a))
            worst = max(worst, abs(amp.real - dist.gaussian_amplitude(a, l)))
    return worst, 1e-10


def check_ground_amplitude_quadrature() -> tuple[float, float]:
    worst = 0.0
    for chi in (0.4, 0.5, 0.8):
        p = model.params_from_chi(chi)
        for (l, l2) in ((0, 0), (0, 2), (1, 1), (2, 2), (1, 3), (0, 4)):
            # oscillator_axis is unnormalized; divide out both norms
            n_l = math.sqrt(math.sqrt(math.pi) * 2.0**l * math.factorial(l))
            n_l2 = math.sqrt(math.sqrt(math.pi) * 2.0**l2 * math.factorial(l2))
            q = oracle.ground_pair_axis_overlap(
                oracle.oscillator_axis(l), oracle.oscillator_axis(l2), chi
            ) / (n_l * n_l2)
            worst = max(worst, abs(q.real - dist._pair_amplitude_1d(p, l, l2)))
    return worst, 1e-10


def check_cumulants_moment_sum() -> tuple[float, float]:
    worst = 0.0
    for chi in CHI_GRID_10:
        p = model.params_from_chi(float(chi))
        u = ent.uncertainties(p)
        taylor = ener.cumulants(u, 6).values
        probs = dist.legendre_distribution(u, truncation_tol=1e-14).probs
        moment = oracle.cumulants_from_distribution(probs, 6)
        scale = np.maximum(1.0, np.abs(taylor))
        worst = max(worst, float(np.max(np.abs(taylor - moment) / scale)))
    return worst, 1e-8


def check_partition_spectral() -> tuple[float, float]:
    worst = 0.0
    for chi in (0.3, 0.5, 0.8):
        p = model.params_from_chi(chi)
        u = ent.uncertainties(p)
        for xi in (0.5, 1.0, 2.0):
            closed = ener.partition_function(u, xi)
            summed = oracle.spectral_sum(p, "partition", xi=xi)
            worst = max(worst, abs(closed - summed))
    return worst, 1e-8


def check_purity_energy_moments() -> tuple[float, float]:
    def err(chi: float) -> float:
        p = model.params_from_chi(chi)
        series = ener.cumulants(ent.uncertainties(p), 2)
        return abs(ener.purity_from_energy_moments(series[1], series[2]) - ent.purity(p))

    return _max_over(CHI_GRID_50, err), 1e-10


def check_witness_nonnegativity() -> tuple[float, float]:
    rng = np.random.default_rng(7041)
    worst = 0.0  # most negative witness value over separable states
    for K in (0.1, 0.3, 0.45):
        ehf = model.hf_energy(model.params_from_K(K))
        chi = (1.0 - 2.0 * K) ** 0.25
        for a in np.geomspace(0.05, 5.0, 12):
            worst = max(worst, -sep.gaussian_energy_gap(model.params_from_K(K), float(a)))
        for _ in range(20):
            lists = _random_coeff_lists(rng)
            e = oracle.energy_quadrature(oracle.wavepacket_state(chi, lists), K)
            worst = max(worst, ehf - e)
    return worst, 1e-10


def check_hf_stationarity() -> tuple[float, float]:
    def err(K: float) -> float:
        e = oracle.energy_quadrature(oracle.hf_state(K), K)
        return abs(e - model.hf_energy(model.params_from_K(K)))

    return _max_over((0.0, 0.2, 0.4, 0.49), err), 1e-10


CHECKS: "dict[str, Callable[[], tuple[float, float]]]" = {
    "quadrature-exactness": check_quadrature_exactness,
    "hf-overlap-vs-quadrature": check_hf_overlap_quadrature,
    "gaussian-overlap-vs-quadrature": check_gaussian_overlap_quadrature,
    "generalized-overlap-vs-quadrature": check_generalized_overlap_quadrature,
    "entropy-vs-spectral-sum": check_entropy_spectral_sum,
    "purity-vs-spectral-sum": check_purity_spectral_sum,
    "purity-vs-uncertainty-route": check_purity_from_uncertainties,
    "chi-ecorr-round-trip": check_chi_ecorr_round_trip,
    "concurrence-ecorr-round-trip": check_concurrence_energy_round_trip,
    "diagonal-vs-legendre": check_distribution_cross_model,
    "distribution-normalization": check_distribution_normalization,
    "amplitude-square-sums": check_amplitude_square_sums,
    "gaussian-amplitude-vs-quadrature": check_gaussian_amplitude_quadrature,
    "ground-amplitude-vs-quadrature": check_ground_amplitude_quadrature,
    "cumulants-vs-moment-sum": check_cumulants_moment_sum,
    "partition-vs-spectral-sum": check_partition_spectral,
    "purity-vs-energy-moments": check_purity_energy_moments,
    "witness-nonnegativity": check_witness_nonnegativity,
    "hf-stationarity-quadrature": check_hf_stationarity,
}


def run_checks(profile: str = "default") -> "list[CheckResult]":
    """Run every registered cross-check; 'strict' tightens tolerances 10x."""
    if profile not in ("default", "strict"):
        raise ValueError(f"unknown tolerance profile {profile!r}")
    factor = 0.1 if profile == "strict" else 1.0
    results = []
    for name, fn in CHECKS.items():
        error, tol = fn()
        results.append(CheckResult(name=name, error=error, tolerance=tol * factor))
    return results


def format_report(results: "list[CheckResult]") -> str:
    lines = []
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(
            f"{status}  {r.name:<{width}}  error={r.error:.3e}  tol={r.tolerance:.1e}"
        )
    failed = [r.name for r in results if not r.passed]
    lines.append(
        f"{len(results) - len(failed)}/{len(results)} checks passed"
        + (f"; FAILED: {', '.join(failed)}" if failed else "")
    )
    return "\n".join(lines)

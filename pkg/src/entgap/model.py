"""Model point and mean-field energetics for two coupled 3D oscillators.

Two identical 3D harmonic oscillators interact through a quadratic
inter-particle potential of strength K in [0, 1/2).  In dimensionless
units (hbar = m = omega = 1) everything is controlled by the effective
coupling

    chi = (1 - 2K)^(1/4),

the relative-mode frequency: chi = 1 is the decoupled pair, chi -> 0 the
degenerate limit where the bound states disappear.  The exact ground
state is a gaussian with different center-of-mass and relative widths;
the Hartree-Fock (mean-field) state is the best factorized gaussian.

All formulas downstream are written in chi (or the scaled coupling
zeta), so `CouplingParams` stores chi and recomputes K on demand; this
avoids repeated fractional-power round trips.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "CORRELATION_ENERGY_SUP",
    "CouplingParams",
    "params_from_K",
    "params_from_chi",
    "energy_level",
    "hf_energy",
    "correlation_energy",
    "hf_overlap",
    "chi_from_correlation_energy",
]

#: Supremum of the correlation energy, reached in the degenerate limit
#: K -> 1/2 (chi -> 0):  (3/2)(sqrt(2) - 1).
CORRELATION_ENERGY_SUP = 1.5 * (math.sqrt(2.0) - 1.0)


@dataclass(frozen=True)
class CouplingParams:
    """A single model point.

    Attributes
    ----------
    K : float
        Bare coupling, in [0, 1/2).
    chi : float
        Effective coupling (1 - 2K)^(1/4), in (0, 1].
    zeta : float
        Scaled coupling (1 - chi^2)/(1 + chi^2), in [0, 1).
    beta : float
        Equivalent Ohmic-bath coupling (1 - chi^4)^2 / (4 (1 + chi^4)),
        in [0, 1/4).
    """

    K: float
    chi: float
    zeta: float
    beta: float


def params_from_chi(chi: float) -> CouplingParams:
    """Build a model point from the effective coupling chi in (0, 1]."""
    if not 0.0 < chi <= 1.0:
        raise ValueError(f"chi must lie in (0, 1], got {chi}")
    chi2 = chi * chi
    chi4 = chi2 * chi2
    return CouplingParams(
        K=0.5 * (1.0 - chi4),
        chi=chi,
        zeta=(1.0 - chi2) / (1.0 + chi2),
        beta=(1.0 - chi4) ** 2 / (4.0 * (1.0 + chi4)),
    )


def params_from_K(K: float) -> CouplingParams:
    """Build a model point from the bare coupling K in [0, 1/2).

    K >= 1/2 is rejected: the relative mode loses its restoring force
    and no bound states exist.
    """
    if not 0.0 <= K < 0.5:
        raise ValueError(f"K must lie in [0, 1/2), got {K}")
    return params_from_chi((1.0 - 2.0 * K) ** 0.25)


def energy_level(p: CouplingParams, n: int, m: int) -> float:
    """Exact spectrum: E_{n,m} = 3/2 (1 + chi^2) + n + m chi^2.

    n counts center-of-mass quanta (unit spacing), m relative-mode
    quanta (spacing chi^2).
    """
    if n < 0 or m < 0:
        raise ValueError("quantum numbers must be nonnegative")
    chi2 = p.chi * p.chi
    return 1.5 * (1.0 + chi2) + n + m * chi2


def hf_energy(p: CouplingParams) -> float:
    """Mean-field (Hartree-Fock) energy 3 sqrt(1 - K)."""
    return 3.0 * math.sqrt(1.0 - p.K)


def correlation_energy(p: CouplingParams) -> float:
    """Energy gap E_HF - E_00 = 3 sqrt(1-K) - (3/2)(1 + sqrt(1-2K)).

    Nonnegative by the variational principle; strictly increasing in K;
    bounded above by CORRELATION_ENERGY_SUP.
    """
    return hf_energy(p) - 1.5 * (1.0 + p.chi * p.chi)


def hf_overlap(p: CouplingParams) -> float:
    """Squared fidelity |<HF|ground>|^2 in (0, 1].

    64 (1-K)^{3/2} (1-2K)^{3/4} / ((1 + sqrt(1-K))(1 + sqrt(1-2K)) - K)^3.
    """
    K = p.K
    num = 64.0 * (1.0 - K) ** 1.5 * (1.0 - 2.0 * K) ** 0.75
    den = ((1.0 + math.sqrt(1.0 - K)) * (1.0 + math.sqrt(1.0 - 2.0 * K)) - K) ** 3
    return num / den


def chi_from_correlation_energy(E: float) -> float:
    """Invert E_corr(chi) algebraically on [0, CORRELATION_ENERGY_SUP).

    chi = [1 - (4/9)(sqrt(2 E (E+3) (2E+3)^2) - 3 E (E+3))]^(1/4).
    """
    if not 0.0 <= E < CORRELATION_ENERGY_SUP:
        raise ValueError(
            f"correlation energy must lie in [0, {CORRELATION_ENERGY_SUP}), got {E}"
        )
    s = E * (E + 3.0)
    inner = math.sqrt(2.0 * s) * (2.0 * E + 3.0) - 3.0 * s
    radicand = 1.0 - (4.0 / 9.0) * inner
    # roundoff guard: the radicand is >= 0 on the legal domain but can
    # dip to -1e-16 as E -> sup
    return max(radicand, 0.0) ** 0.25

"""Reduced one-particle state and every entanglement estimator.

Tracing one oscillator out of the exact ground state leaves a gaussian
mixed state whose spectrum is geometric per axis,

    nu_l = C c^l,   C = 4 chi / (1 + chi)^2,   c = ((1-chi)/(1+chi))^2,

so the 3D eigenvalues are mu_k = C^3 c^k with degeneracy
(k+1)(k+2)/2.  This module provides the closed forms built on that
spectrum (entropy, purity, concurrence), their expansions, and the maps
linking them to the correlation energy and to the measurable
position/momentum spreads.

Entropies are reported in bits (log base 2).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .model import (
    CORRELATION_ENERGY_SUP,
    CouplingParams,
    correlation_energy,
    chi_from_correlation_energy,
    hf_overlap,
    params_from_chi,
)
from .oracle import find_root_bracketed

__all__ = [
    "ReducedSpectrum",
    "UncertaintyPair",
    "reduced_spectrum",
    "reduced_eigenvalue",
    "degeneracy",
    "purity",
    "concurrence",
    "von_neumann_entropy",
    "entropy_small_K_expansion",
    "uncertainties",
    "purity_from_uncertainties",
    "effective_temperature",
    "concurrence_from_correlation_energy",
    "correlation_energy_from_concurrence",
    "entropy_vs_correlation_energy",
    "fidelity_vs_entropy_curve",
]

#: Heisenberg slack: uncertainty products below 1/4 by more than this
#: are treated as unphysical input rather than roundoff.
HEISENBERG_TOL = 1e-12


@dataclass(frozen=True)
class ReducedSpectrum:
    """Geometric spectrum (C, c) of the one-particle reduced state.

    C and c satisfy C = 1 - c identically, which makes the spectral sums
    below elementary geometric series.
    """

    C: float
    c: float


@dataclass(frozen=True)
class UncertaintyPair:
    """Squared position/momentum spreads (dq2, dp2) of a gaussian state."""

    dq2: float
    dp2: float

    def __post_init__(self) -> None:
        if self.dq2 <= 0.0 or self.dp2 <= 0.0:
            raise ValueError("squared uncertainties must be positive")

    @property
    def product(self) -> float:
        return self.dq2 * self.dp2

    def require_physical(self) -> None:
        if self.product < 0.25 - HEISENBERG_TOL:
            raise ValueError(
                f"uncertainty product {self.product} violates dq2*dp2 >= 1/4"
            )


def reduced_spectrum(p: CouplingParams) -> ReducedSpectrum:
    chi = p.chi
    return ReducedSpectrum(
        C=4.0 * chi / (1.0 + chi) ** 2,
        c=((1.0 - chi) / (1.0 + chi)) ** 2,
    )


def degeneracy(k: int) -> int:
    """Multiplicity of mu_k: k(k+3)/2 + 1 = number of (l,m,n) with l+m+n = k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return k * (k + 3) // 2 + 1


def reduced_eigenvalue(p: CouplingParams, k: int) -> float:
    """k-th distinct eigenvalue mu_k = C^3 c^k of the reduced state."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    s = reduced_spectrum(p)
    return s.C**3 * s.c**k


def purity(p: CouplingParams) -> float:
    """Tr[rho_r^2] = 8 chi^3 / (1 + chi^2)^3, decreasing from 1 to 0."""
    chi = p.chi
    return 8.0 * chi**3 / (1.0 + chi * chi) ** 3


def concurrence(p: CouplingParams) -> float:
    """Linear-entropy estimator 1 - Tr[rho_r^2], in [0, 1)."""
    return 1.0 - purity(p)


def von_neumann_entropy(p: CouplingParams) -> float:
    """Entanglement entropy of the ground state, in bits.

    (3/(chi ln4)) [(chi+1)^2 ln(chi+1) - 2 chi ln(4 chi)
                   - (chi-1)^2 ln|chi-1|].

    The chi = 1 point is an exact zero (pure decoupled state); the
    closed form has a removable 0*log(0) there, handled by an explicit
    branch.
    """
    chi = p.chi
    if chi == 1.0:
        return 0.0
    bracket = (
        (chi + 1.0) ** 2 * math.log(chi + 1.0)
        - 2.0 * chi * math.log(4.0 * chi)
        - (chi - 1.0) ** 2 * math.log(abs(chi - 1.0))
    )
    return 3.0 / (chi * math.log(4.0)) * bracket


def entropy_small_K_expansion(K: float) -> float:
    """Leading small-coupling behavior -3 K^2 (1+2K) ln K / (8 ln 2), bits.

    Accurate only for K << 1; a warning is emitted above K = 0.05 where
    the expansion degrades quickly.
    """
    if K < 0.0:
        raise ValueError("K must be nonnegative")
    if K == 0.0:
        return 0.0
    if K > 0.05:
        warnings.warn(
            "entropy_small_K_expansion is unreliable for K > 0.05",
            stacklevel=2,
        )
    return -3.0 * K * K * (1.0 + 2.0 * K) * math.log(K) / (8.0 * math.log(2.0))


def uncertainties(p: CouplingParams) -> UncertaintyPair:
    """One-particle spreads: dq2 = (chi^2+1)/(4 chi^2), dp2 = (chi^2+1)/4.

    The product ((chi^2+1)/(4 chi))^2 >= 1/4 saturates only at chi = 1,
    and the ratio recovers the coupling: chi^2 = sqrt(dp2/dq2).
    """
    chi2 = p.chi * p.chi
    return UncertaintyPair(dq2=(chi2 + 1.0) / (4.0 * chi2), dp2=(chi2 + 1.0) / 4.0)


def purity_from_uncertainties(u: UncertaintyPair) -> float:
    """Purity estimator (geometric mean / arithmetic mean)^3 of (dq2, dp2).

    Exact for the coupled-pair reduced state (where it reproduces
    `purity`); for a generic gaussian state it is only the quoted
    mean-ratio diagnostic, not Tr[rho^2].
    """
    u.require_physical()
    gm = math.sqrt(u.product)
    am = 0.5 * (u.dq2 + u.dp2)
    return (gm / am) ** 3


def effective_temperature(p: CouplingParams) -> float:
    """Equilibrium temperature of the natural-orbital weights.

    k_B T* = 3 chi / (2 ln((1+chi)/(1-chi))); decreasing in chi, with
    limit 3/4 as chi -> 0.  Diverges at the decoupled point, so chi = 1
    is rejected.
    """
    chi = p.chi
    if not 0.0 < chi < 1.0:
        raise ValueError("effective temperature requires 0 < chi < 1")
    return 3.0 * chi / (2.0 * math.log((1.0 + chi) / (1.0 - chi)))


def concurrence_from_correlation_energy(E: float) -> float:
    """Concurrence as an explicit function of the correlation energy.

    1 - 24 sqrt(3) f^{3/4} / (f^{1/2} + 3)^3 with
    f = 9 + 12 E (E+3) - 4 sqrt(2) sqrt(E (E+3) (2E+3)^2);
    f equals 9 chi^4 on the legal domain.
    """
    if not 0.0 <= E < CORRELATION_ENERGY_SUP:
        raise ValueError(
            f"correlation energy must lie in [0, {CORRELATION_ENERGY_SUP}), got {E}"
        )
    s = E * (E + 3.0)
    f = 9.0 + 12.0 * s - 4.0 * math.sqrt(2.0 * s) * (2.0 * E + 3.0)
    f = max(f, 0.0)
    return 1.0 - 24.0 * math.sqrt(3.0) * f**0.75 / (math.sqrt(f) + 3.0) ** 3


def correlation_energy_from_concurrence(Cc: float, mode: str = "exact-root") -> float:
    """Invert the concurrence-energy relation.

    mode:
      "small-expansion"  Cc - sqrt(2/3) Cc^{3/2} + (2/3) Cc^2
                         (the half-integer term carries a minus sign:
                         with a plus the residual against the exact
                         relation scales like Cc^{3/2} instead of the
                         Cc^{5/2} this truncation achieves)
      "large-expansion"  E_sup - (3/8)(1-Cc)^{2/3}
                               + (3/64)(sqrt(2)-4)(1-Cc)^{4/3}
      "exact-root"       bracketed bisection of the exact relation,
                         1e-12 absolute tolerance
    """
    if not 0.0 <= Cc < 1.0:
        raise ValueError(f"concurrence must lie in [0, 1), got {Cc}")
    if mode == "small-expansion":
        return Cc - math.sqrt(2.0 / 3.0) * Cc**1.5 + (2.0 / 3.0) * Cc * Cc
    if mode == "large-expansion":
        onem = 1.0 - Cc
        return (
            CORRELATION_ENERGY_SUP
            - 0.375 * onem ** (2.0 / 3.0)
            + (3.0 / 64.0) * (math.sqrt(2.0) - 4.0) * onem ** (4.0 / 3.0)
        )
    if mode == "exact-root":
        if Cc == 0.0:
            return 0.0
        return find_root_bracketed(
            lambda E: concurrence_from_correlation_energy(E) - Cc,
            0.0,
            CORRELATION_ENERGY_SUP - 1e-12,
            tol=1e-12,
        )
    raise ValueError(f"unknown mode {mode!r}")


def entropy_vs_correlation_energy(E: float, mode: str = "exact") -> float:
    """Entanglement entropy as a function of the correlation energy, bits.

    mode:
      "exact"                compose the algebraic inversion chi(E) with
                             the closed-form entropy
      "small-expansion"      (1 + ln 6 - ln E) E / (2 ln 2)
      "divergent-expansion"  -3 ln(E_sup - E) / ln 4
    """
    if not 0.0 <= E < CORRELATION_ENERGY_SUP:
        raise ValueError(
            f"correlation energy must lie in [0, {CORRELATION_ENERGY_SUP}), got {E}"
        )
    if mode == "exact":
        return von_neumann_entropy(params_from_chi(chi_from_correlation_energy(E)))
    if mode == "small-expansion":
        if E == 0.0:
            return 0.0
        return (1.0 + math.log(6.0) - math.log(E)) * E / (2.0 * math.log(2.0))
    if mode == "divergent-expansion":
        return -3.0 * math.log(CORRELATION_ENERGY_SUP - E) / math.log(4.0)
    raise ValueError(f"unknown mode {mode!r}")


def fidelity_vs_entropy_curve(
    chi_grid: "list[float]",
) -> "list[tuple[float, float]]":
    """(entropy, HF overlap) pairs along a chi grid.

    Overlap is a decreasing function of entropy along the curve: both
    quantities are strictly monotone in chi.
    """
    out = []
    for chi in chi_grid:
        p = params_from_chi(chi)
        out.append((von_neumann_entropy(p), hf_overlap(p)))
    return out

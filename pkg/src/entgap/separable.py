"""Geometry of symmetric separable pure states around the mean-field point.

The one-parameter gaussian family Phi_a(r1) Phi_a(r2), with axis factor
e^{-a x^2/2}, contains the Hartree-Fock state at a = sqrt(1-K) and the
maximal-overlap ("natural orbital") state at a = chi.  Its overlap with
the exact ground state exceeds the HF overlap exactly on the interval
[a_low(chi), sqrt(1-K)], and Hermite-deformed wavepackets never beat the
a = chi maximum.  Energetically the ordering is reversed: the HF point
is the strict minimum of <H> over the whole separable family, which is
what makes H - E_HF an entanglement witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .model import CouplingParams, correlation_energy, hf_overlap
from .oracle import find_root_bracketed

__all__ = [
    "GaussianSeparableState",
    "WavepacketCoefficients",
    "gaussian_overlap",
    "max_overlap",
    "a_low",
    "generalized_overlap",
    "gaussian_energy_gap",
    "witness_expectation_ground",
    "a_low_quadratic_coefficient",
]


@dataclass(frozen=True)
class GaussianSeparableState:
    """Point on the gaussian separable curve, labeled by the exponent a > 0."""

    a: float

    def __post_init__(self) -> None:
        if self.a <= 0.0:
            raise ValueError("exponent a must be positive")


@dataclass(frozen=True)
class WavepacketCoefficients:
    """Per-axis complex Hermite coefficients of a deformed wavepacket."""

    axes: tuple

    def __post_init__(self) -> None:
        if len(self.axes) != 3:
            raise ValueError("need coefficients for exactly three axes")
        for c in self.axes:
            if not any(v != 0 for v in c):
                raise ValueError("every axis needs a nonzero coefficient")

    @classmethod
    def from_lists(cls, lists: Sequence[Sequence[complex]]) -> "WavepacketCoefficients":
        return cls(axes=tuple(tuple(complex(v) for v in c) for c in lists))


def gaussian_overlap(p: CouplingParams, a: float) -> float:
    """|<Phi_a Phi_a|ground>|^2 = 64 a^3 chi^3 / ((a+1)^3 (chi^2+a)^3).

    Equals hf_overlap at a = sqrt(1-K); maximized at a = chi.
    """
    if a <= 0.0:
        raise ValueError("exponent a must be positive")
    chi = p.chi
    return 64.0 * a**3 * chi**3 / ((a + 1.0) ** 3 * (chi * chi + a) ** 3)


def max_overlap(p: CouplingParams) -> float:
    """Best separable overlap 64 chi^3/(chi+1)^6, attained at a = chi."""
    chi = p.chi
    return 64.0 * chi**3 / (chi + 1.0) ** 6


def a_low(p: CouplingParams, tol: float = 1e-12) -> float:
    """Lower endpoint of the interval where the gaussian family beats HF.

    The unique a < chi with gaussian_overlap(a) = hf_overlap, found by
    bisection on [~0, chi] (the overlap is increasing below its maximum).
    At chi = 1 the interval degenerates and a_low = 1 exactly.
    """
    chi = p.chi
    if chi == 1.0:
        return 1.0
    target = hf_overlap(p)
    return find_root_bracketed(
        lambda a: gaussian_overlap(p, a) - target, 1e-12, chi, tol=tol
    )


def a_low_quadratic_coefficient(chi_probe: float = 1e-3) -> float:
    """Empirical small-chi coefficient gamma in a_low ~ gamma chi^2.

    Estimated by evaluating a_low at a small probe coupling; the limit
    is not asserted anywhere, only reported.
    """
    from .model import params_from_chi

    return a_low(params_from_chi(chi_probe)) / chi_probe**2


def generalized_overlap(p: CouplingParams, w: WavepacketCoefficients) -> float:
    """|<wavepacket|ground>|^2 for a Hermite-deformed separable state.

    max_overlap(p) * prod_i |sum_j 2^j j! c_j^2 t^j|^2
                            / (sum_j 2^j j! |c_j|^2)^2,
    t = (chi-1)/(chi+1).  Each axis factor lies in [0, 1] (the numerator
    squares the coefficients themselves, not their moduli), so the
    deformation can only lose overlap.
    """
    chi = p.chi
    t = (chi - 1.0) / (chi + 1.0)
    out = max_overlap(p)
    for coeffs in w.axes:
        num = 0.0 + 0.0j
        den = 0.0
        for j, cj in enumerate(coeffs):
            wj = 2.0**j * math.factorial(j)
            num += wj * cj * cj * t**j
            den += wj * abs(cj) ** 2
        out *= abs(num) ** 2 / den**2
    return out


def gaussian_energy_gap(p: CouplingParams, a: float) -> float:
    """<H>_a - E_HF = 3 (a - sqrt(1-K))^2 / (2a) >= 0 on the gaussian curve."""
    if a <= 0.0:
        raise ValueError("exponent a must be positive")
    return 3.0 * (a - math.sqrt(1.0 - p.K)) ** 2 / (2.0 * a)


def witness_expectation_ground(p: CouplingParams) -> float:
    """Ground-state expectation of the witness H - E_HF: equals -E_corr <= 0.

    Separable states give the witness a nonnegative value (the energy
    gap above), so a measured negative value certifies entanglement.
    """
    return -correlation_energy(p)

"""Energy-cumulant analysis of the traced-out oscillator, and the
zero-temperature Ohmic bath it is compared against.

For a gaussian reduced state with spreads (dq2, dp2) the imaginary-time
trace of the unit-frequency oscillator propagator is

    Z(xi) = [(dp2+dq2) sinh xi + 2 dq2 dp2 (cosh xi - 1)
             + (1 + cosh xi)/2]^(-3/2),

and the energy cumulants are the Taylor coefficients of ln Z at xi = 0
(with (-1)^n n! factors).  They are computed here by truncated power
series arithmetic in exact rational coefficients, so every order is
correct to the last floating-point digit; a minimal packet yields
exactly (3/2, 0, 0, ...).

The Ohmic side uses the underdamped zero-temperature variances with
coupling beta and cutoff ratio omega_C/omega, paired to the oscillator
model through beta = (1 - chi^4)^2 / (4 (1 + chi^4)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .entanglement import UncertaintyPair, uncertainties
from .model import params_from_chi

__all__ = [
    "CumulantSeries",
    "partition_function",
    "cumulants",
    "ohmic_uncertainties",
    "beta_from_chi",
    "slope_fit",
    "slope_ratio_R",
    "purity_from_energy_moments",
    "second_cumulant_sweep",
]

MAX_CUMULANT_ORDER = 20
DEFAULT_CUTOFF_RATIO = 10.0
DEFAULT_FIT_ORDER = 8


@dataclass(frozen=True)
class CumulantSeries:
    """Cumulants <<H^n>>, n = 1..order, of the 3D oscillator energy."""

    values: np.ndarray
    source: UncertaintyPair
    order: int

    def __getitem__(self, n: int) -> float:
        """1-based access: series[n] = <<H^n>>."""
        if not 1 <= n <= self.order:
            raise IndexError(f"cumulant order {n} outside 1..{self.order}")
        return float(self.values[n - 1])


def partition_function(u: UncertaintyPair, xi: float) -> float:
    """Z(xi) = <e^{-xi H}> for the gaussian reduced state; Z(0) = 1."""
    if xi < 0.0:
        raise ValueError("imaginary-time argument xi must be nonnegative")
    u.require_physical()
    bracket = (
        (u.dp2 + u.dq2) * math.sinh(xi)
        + 2.0 * u.dq2 * u.dp2 * (math.cosh(xi) - 1.0)
        + 0.5 * (1.0 + math.cosh(xi))
    )
    return bracket**-1.5


def _log_bracket_series(s: Fraction, g: Fraction, N: int) -> list[Fraction]:
    """Taylor coefficients of ln[s sinh + 2g(cosh-1) + (1+cosh)/2] at 0.

    Exact rational arithmetic end to end; the bracket has unit constant
    term so the log-series recurrence needs no division by the leading
    coefficient.
    """
    b = [Fraction(1)]
    for k in range(1, N + 1):
        fk = math.factorial(k)
        b.append(s / fk if k % 2 else (2 * g + Fraction(1, 2)) / fk)
    log_coeffs = [Fraction(0)] * (N + 1)
    for k in range(N):
        acc = (k + 1) * b[k + 1]
        for m in range(1, k + 1):
            acc -= b[m] * (k - m + 1) * log_coeffs[k - m + 1]
        log_coeffs[k + 1] = acc / (k + 1)
    return log_coeffs


def cumulants(u: UncertaintyPair, N: int) -> CumulantSeries:
    """<<H^n>> for n = 1..N via series arithmetic on ln Z.

    <<H^n>> = (-1)^n d^n/dxi^n ln Z|_0 = (3/2)(-1)^{n+1} n! [ln bracket]_n.
    The first value is exactly (3/2)(dq2 + dp2).
    """
    if not 1 <= N <= MAX_CUMULANT_ORDER:
        raise ValueError(f"cumulant order must lie in 1..{MAX_CUMULANT_ORDER}")
    u.require_physical()
    lc = _log_bracket_series(Fraction(u.dq2) + Fraction(u.dp2),
                             Fraction(u.dq2) * Fraction(u.dp2), N)
    vals = np.array(
        [float(Fraction(3, 2) * (-1) ** (n + 1) * math.factorial(n) * lc[n])
         for n in range(1, N + 1)]
    )
    return CumulantSeries(values=vals, source=u, order=N)


def ohmic_uncertainties(
    beta: float, cutoff_ratio: float = DEFAULT_CUTOFF_RATIO
) -> UncertaintyPair:
    """Underdamped zero-temperature variances of the Ohmic-bath oscillator.

    dq2 = (1 - (2/pi) arctan(beta/sqrt(1-beta^2))) / (2 sqrt(1-beta^2)),
    dp2 = (1 - 2 beta^2) dq2 + (2 beta/pi) ln(cutoff_ratio).

    The result must stay on the physical side of dq2 dp2 >= 1/4; the
    underdamped approximation can stray below for cutoff ratios under e,
    in which case this raises rather than hand back an unphysical state.
    """
    if not 0.0 <= beta < 1.0:
        raise ValueError(f"underdamped coupling requires 0 <= beta < 1, got {beta}")
    if cutoff_ratio <= 1.0:
        raise ValueError(f"cutoff_ratio must exceed 1, got {cutoff_ratio}")
    root = math.sqrt(1.0 - beta * beta)
    dq2 = (1.0 - (2.0 / math.pi) * math.atan(beta / root)) / (2.0 * root)
    dp2 = (1.0 - 2.0 * beta * beta) * dq2 + (2.0 * beta / math.pi) * math.log(cutoff_ratio)
    pair = UncertaintyPair(dq2=dq2, dp2=dp2)
    pair.require_physical()
    return pair


def beta_from_chi(chi: float) -> float:
    """Ohmic coupling equivalent to the pair coupling chi.

    beta = (1 - chi^4)^2 / (4 (1 + chi^4)): 0 at the decoupled point,
    1/4 in the degenerate limit, monotone decreasing in chi.
    """
    if not 0.0 < chi <= 1.0:
        raise ValueError(f"chi must lie in (0, 1], got {chi}")
    chi4 = chi**4
    return (1.0 - chi4) ** 2 / (4.0 * (1.0 + chi4))


def slope_fit(values: np.ndarray) -> tuple[float, float]:
    """OLS slope of ln values[n] vs n (n = 1..N) and the RMS fit residual."""
    values = np.asarray(values, dtype=float)
    if np.any(values <= 0.0):
        raise ValueError("cumulants must be positive to fit ln<<H^n>>")
    n = np.arange(1, values.size + 1, dtype=float)
    y = np.log(values)
    slope, intercept = np.polyfit(n, y, 1)
    resid = y - (slope * n + intercept)
    return float(slope), float(math.sqrt(np.mean(resid**2)))


def slope_ratio_R(
    chi: float,
    N: int = DEFAULT_FIT_ORDER,
    cutoff_ratio: float = DEFAULT_CUTOFF_RATIO,
) -> float:
    """Relative slope difference R = 1 - slope_Ohmic / slope_pair.

    Both slopes fit ln<<H^n>> against n over n = 1..N, the pair model at
    coupling chi and the Ohmic bath at beta(chi).  Large R at weak and
    strong coupling, dipping below 0.5 in between, separates the two
    environment types.  A vanishing pair slope (the fit degenerates as
    chi -> 1, where all higher cumulants die) raises.
    """
    if not 0.0 < chi < 1.0:
        raise ValueError(f"slope ratio requires 0 < chi < 1, got {chi}")
    if N < 3:
        raise ValueError("need at least 3 cumulant orders for a slope fit")
    pair_slope, _ = slope_fit(cumulants(uncertainties(params_from_chi(chi)), N).values)
    ohmic_slope, _ = slope_fit(
        cumulants(ohmic_uncertainties(beta_from_chi(chi), cutoff_ratio), N).values
    )
    if abs(pair_slope) < 1e-12:
        raise ValueError(f"degenerate fit: pair-model slope vanishes at chi={chi}")
    return 1.0 - ohmic_slope / pair_slope


def purity_from_energy_moments(mean: float, second_cumulant: float) -> float:
    """Tr[rho^2] estimator from the first two energy cumulants.

    (sqrt(8 <<H>>^2 - 12 <<H^2>> - 9) / (2 <<H>>))^3; on gaussian reduced
    states the radicand collapses to 36 (dq2 dp2) and the estimator
    coincides with the mean-ratio purity.
    """
    if mean < 1.5:
        raise ValueError(f"mean energy below the 3D ground state: {mean}")
    radicand = 8.0 * mean * mean - 12.0 * second_cumulant - 9.0
    if radicand < 0.0:
        raise ValueError(
            f"unphysical moment pair (mean={mean}, <<H^2>>={second_cumulant})"
        )
    return (math.sqrt(radicand) / (2.0 * mean)) ** 3


def second_cumulant_sweep(
    chi_grid, cutoff_ratio: float = DEFAULT_CUTOFF_RATIO
) -> "list[tuple[float, float, float]]":
    """(chi, <<H^2>> pair model, <<H^2>> Ohmic) rows over a chi grid.

    The pair column diverges as chi -> 0 while the Ohmic one stays
    bounded; both vanish together at chi = 1.
    """
    rows = []
    for chi in chi_grid:
        pair_k2 = cumulants(uncertainties(params_from_chi(chi)), 2)[2]
        ohmic_k2 = cumulants(ohmic_uncertainties(beta_from_chi(chi), cutoff_ratio), 2)[2]
        rows.append((float(chi), pair_k2, ohmic_k2))
    return rows

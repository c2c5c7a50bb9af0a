"""Brute-force verification layer: quadrature, spectral sums, bisection.

Every closed form in the package has an independent cross-check routed
through here.  The oracle deliberately re-derives its own ingredients
(spectrum weights, gaussian integrals) instead of importing the
formulas it is meant to verify.

Wavefunctions are described per axis as

    f(x) = (sum_j c_j H_j(sqrt(scale) x)) * exp(-decay x^2 / 2)

with physicists' Hermite polynomials; every state appearing in the
model (oscillator eigenfunctions, factorized gaussians, Hermite-deformed
wavepackets, the exact ground state in rotated coordinates) is of this
polynomial-times-gaussian form, so Gauss-Hermite quadrature with an
analytically absorbed scale integrates it exactly up to the polynomial
degree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from numpy.polynomial import hermite as H

from .model import CouplingParams

__all__ = [
    "QuadratureRule",
    "hermite_rule",
    "HermiteAxis",
    "SeparableState",
    "GroundState",
    "oscillator_axis",
    "gaussian_axis",
    "gaussian_separable",
    "hf_state",
    "wavepacket_state",
    "axis_overlap",
    "ground_pair_axis_overlap",
    "overlap_quadrature",
    "energy_quadrature",
    "spectral_sum",
    "cumulants_from_distribution",
    "find_root_bracketed",
]

DEFAULT_ORDER = 80
#: Doubling the order must move a converged overlap by less than this.
CONVERGENCE_TOL = 1e-11


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Hermite nodes/weights for the weight exp(-x^2)."""

    nodes: np.ndarray
    weights: np.ndarray
    order: int


_RULE_CACHE: dict[int, QuadratureRule] = {}


def hermite_rule(order: int) -> QuadratureRule:
    """Gauss-Hermite rule, exact for polynomials of degree <= 2*order - 1."""
    if order < 1:
        raise ValueError("order must be positive")
    rule = _RULE_CACHE.get(order)
    if rule is None:
        x, w = H.hermgauss(order)
        rule = QuadratureRule(nodes=x, weights=w, order=order)
        _RULE_CACHE[order] = rule
    return rule


@dataclass(frozen=True)
class HermiteAxis:
    """One cartesian factor: (sum_j c_j H_j(sqrt(scale) x)) e^(-decay x^2/2)."""

    decay: float
    coeffs: tuple
    scale: float

    def __post_init__(self) -> None:
        if self.decay <= 0.0:
            raise ValueError("decay must be positive")
        if not any(c != 0 for c in self.coeffs):
            raise ValueError("at least one coefficient must be nonzero")

    def poly(self, x: np.ndarray) -> np.ndarray:
        """Polynomial part at x (the gaussian factor is handled analytically)."""
        return H.hermval(math.sqrt(self.scale) * x, np.asarray(self.coeffs, dtype=complex))

    def dpoly(self, x: np.ndarray) -> np.ndarray:
        """Polynomial part of f'(x) = (P'(x) - decay * x * P(x)) e^(-decay x^2/2)."""
        c = np.asarray(self.coeffs, dtype=complex)
        sq = math.sqrt(self.scale)
        dc = sq * H.hermder(c)
        xc = H.hermmulx(c) / sq
        out = np.zeros(max(len(dc), len(xc)), dtype=complex)
        out[: len(dc)] += dc
        out[: len(xc)] -= self.decay * xc
        return H.hermval(sq * x, out)


def oscillator_axis(l: int) -> HermiteAxis:
    """Unit-frequency oscillator eigenfunction H_l(x) e^{-x^2/2} (unnormalized)."""
    if l < 0:
        raise ValueError("l must be nonnegative")
    return HermiteAxis(decay=1.0, coeffs=(0.0,) * l + (1.0,), scale=1.0)


def gaussian_axis(a: float) -> HermiteAxis:
    """Gaussian axis factor e^{-a x^2/2}."""
    return HermiteAxis(decay=a, coeffs=(1.0,), scale=a)


@dataclass(frozen=True)
class SeparableState:
    """Symmetric product state Phi(r1) Phi(r2) with Phi = prod of axis factors."""

    axes: tuple


@dataclass(frozen=True)
class GroundState:
    """Exact ground state: e^{-R^2/2 - chi^2 r^2/2} per axis, normalized."""

    chi: float


def gaussian_separable(a: float) -> SeparableState:
    return SeparableState(axes=(gaussian_axis(a),) * 3)


def hf_state(K: float) -> SeparableState:
    """Mean-field state: the factorized gaussian with a = sqrt(1 - K)."""
    return gaussian_separable(math.sqrt(1.0 - K))


def wavepacket_state(chi: float, coeff_lists: Sequence[Sequence[complex]]) -> SeparableState:
    """Hermite-deformed wavepacket around the natural-orbital gaussian."""
    if len(coeff_lists) != 3:
        raise ValueError("need one coefficient list per axis")
    axes = tuple(
        HermiteAxis(decay=chi, coeffs=tuple(c), scale=chi) for c in coeff_lists
    )
    return SeparableState(axes=axes)


# ---------------------------------------------------------------------------
# quadrature primitives
# ---------------------------------------------------------------------------


def _axis_inner(f: HermiteAxis, g: HermiteAxis, rule: QuadratureRule,
                weight_x: int = 0) -> complex:
    """integral conj(f) g x^weight_x dx with the gaussian handled analytically."""
    sigma = 0.5 * (f.decay + g.decay)
    x = rule.nodes / math.sqrt(sigma)
    vals = np.conjugate(f.poly(x)) * g.poly(x)
    if weight_x:
        vals = vals * x**weight_x
    return complex(np.sum(rule.weights * vals) / math.sqrt(sigma))


def axis_overlap(f: HermiteAxis, g: HermiteAxis, order: int = DEFAULT_ORDER) -> complex:
    """Normalized 1D overlap <f|g>."""
    rule = hermite_rule(order)
    nf = math.sqrt(abs(_axis_inner(f, f, rule)))
    ng = math.sqrt(abs(_axis_inner(g, g, rule)))
    return _axis_inner(f, g, rule) / (nf * ng)


def ground_pair_axis_overlap(
    f1: HermiteAxis, f2: HermiteAxis, chi: float, order: int = DEFAULT_ORDER
) -> complex:
    """<f1(x1) f2(x2) | ground axis> for one cartesian axis (unnormalized f's).

    Evaluated in rotated coordinates R = (x1+x2)/sqrt2, r = (x1-x2)/sqrt2
    where the ground-state factor separates; requires both one-particle
    factors to share the same gaussian decay so that the pair weight
    stays a product.
    """
    if abs(f1.decay - f2.decay) > 1e-13:
        raise ValueError("pair overlap requires equal axis decays")
    rule = hermite_rule(order)
    d = f1.decay
    sR = 0.5 * (d + 1.0)
    sr = 0.5 * (d + chi * chi)
    Rn = rule.nodes / math.sqrt(sR)
    rn = rule.nodes / math.sqrt(sr)
    x1 = (Rn[:, None] + rn[None, :]) / math.sqrt(2.0)
    x2 = (Rn[:, None] - rn[None, :]) / math.sqrt(2.0)
    vals = np.conjugate(f1.poly(x1)) * np.conjugate(f2.poly(x2))
    total = np.einsum("i,j,ij->", rule.weights, rule.weights, vals)
    return complex(math.sqrt(chi / math.pi) * total / math.sqrt(sR * sr))


def _overlap_once(a, b, order: int) -> complex:
    rule = hermite_rule(order)
    if isinstance(a, GroundState) and isinstance(b, GroundState):
        # both separate in the same rotated coordinates; gaussian integrals
        axis = math.sqrt(a.chi * b.chi) * math.sqrt(2.0 / (a.chi**2 + b.chi**2))
        return complex(axis**3)
    if isinstance(a, SeparableState) and isinstance(b, SeparableState):
        out = 1.0 + 0.0j
        for fa, fb in zip(a.axes, b.axes):
            na = math.sqrt(abs(_axis_inner(fa, fa, rule)))
            nb = math.sqrt(abs(_axis_inner(fb, fb, rule)))
            out *= (_axis_inner(fa, fb, rule) / (na * nb)) ** 2
        return out
    if isinstance(a, GroundState):
        return np.conjugate(_overlap_once(b, a, order))
    if isinstance(a, SeparableState) and isinstance(b, GroundState):
        out = 1.0 + 0.0j
        for fa in a.axes:
            n2 = abs(_axis_inner(fa, fa, rule))
            out *= ground_pair_axis_overlap(fa, fa, b.chi, order) / n2
        return out
    raise TypeError(f"unsupported state descriptors {type(a)}, {type(b)}")


def overlap_quadrature(a, b, order: int = DEFAULT_ORDER) -> complex:
    """Normalized overlap <a|b> for any pair of state descriptors.

    The result is recomputed at double the order; disagreement beyond
    CONVERGENCE_TOL flags an under-resolved rule.
    """
    v1 = _overlap_once(a, b, order)
    v2 = _overlap_once(a, b, 2 * order)
    if abs(v1 - v2) > CONVERGENCE_TOL * max(1.0, abs(v2)):
        raise RuntimeError(
            f"quadrature not converged at order {order}: {v1} vs {v2}"
        )
    return v2


def energy_quadrature(state: SeparableState, K: float, order: int = DEFAULT_ORDER) -> float:
    """<H> for a normalized symmetric product state, by 1D quadratures.

    Per axis, with normalized one-particle moments T = <p^2>/2,
    s = <x^2>, m = <x>:  <H_axis> = 2T + (1-K) s + K m^2; the coupling
    term uses <(x1-x2)^2> = 2(s - m^2) for identical factors.
    """
    rule = hermite_rule(order)
    total = 0.0
    for f in state.axes:
        sigma = f.decay
        x = rule.nodes / math.sqrt(sigma)
        dens = np.abs(f.poly(x)) ** 2
        n2 = float(np.sum(rule.weights * dens) / math.sqrt(sigma))
        s = float(np.sum(rule.weights * x**2 * dens) / math.sqrt(sigma)) / n2
        m = float(np.sum(rule.weights * x * dens) / math.sqrt(sigma)) / n2
        dvals = np.abs(f.dpoly(x)) ** 2
        T = 0.5 * float(np.sum(rule.weights * dvals) / math.sqrt(sigma)) / n2
        total += 2.0 * T + (1.0 - K) * s + K * m * m
    return total


# ---------------------------------------------------------------------------
# spectral sums
# ---------------------------------------------------------------------------

SPECTRAL_CAP = 10**6


def spectral_sum(
    p: CouplingParams,
    functional: str,
    tail_tol: float = 1e-12,
    xi: float | None = None,
) -> float:
    """Truncated sum over the reduced-state spectrum (or energy levels).

    functional:
      "entropy"    - sum deg(k) mu_k log2 mu_k           (bits)
      "purity"      sum deg(k) mu_k^2
      "partition"   [sum_l rho_ll e^{-xi (l+1/2)}]^3, from the exact
                    diagonal recursion (requires xi >= 0)

    The cutoff extends until the geometric tail bound drops below
    tail_tol; exceeding the term cap raises with a diagnostic.
    """
    if tail_tol <= 0.0:
        raise ValueError("tail_tol must be positive")
    chi = p.chi
    if functional == "partition":
        if xi is None or xi < 0.0:
            raise ValueError("partition functional requires xi >= 0")
        from .distributions import moshinsky_diagonal

        dist = moshinsky_diagonal(p, truncation_tol=tail_tol)
        levels = np.arange(dist.probs.size) + 0.5
        return float(np.sum(dist.probs * np.exp(-xi * levels))) ** 3

    # geometric spectrum, derived here independently of the closed forms
    C = 4.0 * chi / (1.0 + chi) ** 2
    c = ((1.0 - chi) / (1.0 + chi)) ** 2
    if functional == "entropy":
        f: Callable[[float], float] = lambda mu: -mu * math.log2(mu) if mu > 0 else 0.0
    elif functional == "purity":
        f = lambda mu: mu * mu
    else:
        raise ValueError(f"unknown functional {functional!r}")

    total = 0.0
    prev = math.inf
    k = 0
    while k < SPECTRAL_CAP:
        mu = C**3 * c**k
        deg = k * (k + 3) // 2 + 1
        term = deg * f(mu)
        total += term
        if term < 1e-15 and k > 0:
            ratio = term / prev if prev > 0 else 0.0
            if ratio < 1.0 and term * ratio / (1.0 - ratio) < tail_tol:
                return total
        prev = term if term > 0 else prev
        k += 1
    raise RuntimeError(
        f"spectral sum did not converge below tail_tol={tail_tol} "
        f"within {SPECTRAL_CAP} terms (chi={chi})"
    )


def cumulants_from_distribution(probs: np.ndarray, N: int) -> np.ndarray:
    """3D energy cumulants from a 1D level distribution (axis energies l+1/2).

    Raw moments of the 1D distribution are converted to cumulants by the
    standard recursion, then tripled (the three axes are independent and
    identically distributed).
    """
    probs = np.asarray(probs, dtype=float)
    levels = np.arange(probs.size) + 0.5
    raw = [1.0] + [float(np.sum(probs * levels**n)) for n in range(1, N + 1)]
    kappa = [0.0] * (N + 1)
    for n in range(1, N + 1):
        kappa[n] = raw[n] - sum(
            math.comb(n - 1, j - 1) * kappa[j] * raw[n - j] for j in range(1, n)
        )
    return 3.0 * np.array(kappa[1:])


def find_root_bracketed(
    f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-12
) -> float:
    """Bisection on a sign-changing bracket; deterministic, monotone-safe."""
    flo = f(lo)
    fhi = f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise ValueError(f"invalid bracket: f({lo})={flo}, f({hi})={fhi}")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if flo * fmid < 0.0:
            hi = mid
        else:
            lo, flo = mid, fmid
        if hi - lo < tol:
            break
    return 0.5 * (lo + hi)

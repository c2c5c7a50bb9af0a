"""entgap: entanglement vs. correlation energy for two coupled oscillators.

A library and CLI for the exactly solvable pair of 3D harmonic
oscillators with quadratic coupling: exact and mean-field energetics,
entanglement measures of the reduced one-particle state, the overlap
geometry of separable states, one-particle energy distributions and
their cumulants, and the comparison against a zero-temperature Ohmic
bath.  An independent quadrature/spectral-sum oracle layer cross-checks
every closed form (`entgap verify`).
"""

__version__ = "0.1.0"

from .model import (
    CORRELATION_ENERGY_SUP,
    CouplingParams,
    chi_from_correlation_energy,
    correlation_energy,
    energy_level,
    hf_energy,
    hf_overlap,
    params_from_K,
    params_from_chi,
)
from .entanglement import (
    ReducedSpectrum,
    UncertaintyPair,
    concurrence,
    concurrence_from_correlation_energy,
    correlation_energy_from_concurrence,
    degeneracy,
    effective_temperature,
    entropy_small_K_expansion,
    entropy_vs_correlation_energy,
    fidelity_vs_entropy_curve,
    purity,
    purity_from_uncertainties,
    reduced_eigenvalue,
    reduced_spectrum,
    uncertainties,
    von_neumann_entropy,
)
from .separable import (
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
from .distributions import (
    EnergyDistribution,
    chessboard_amplitude,
    factorized_gaussian_diagonal,
    gaussian_amplitude,
    ground_state_amplitude,
    legendre_distribution,
    moshinsky_diagonal,
)
from .energetics import (
    CumulantSeries,
    beta_from_chi,
    cumulants,
    ohmic_uncertainties,
    partition_function,
    purity_from_energy_moments,
    second_cumulant_sweep,
    slope_ratio_R,
)

__all__ = [
    "__version__",
    # model
    "CORRELATION_ENERGY_SUP", "CouplingParams", "params_from_K", "params_from_chi",
    "energy_level", "hf_energy", "correlation_energy", "hf_overlap",
    "chi_from_correlation_energy",
    # entanglement
    "ReducedSpectrum", "UncertaintyPair", "reduced_spectrum", "reduced_eigenvalue",
    "degeneracy", "purity", "concurrence", "von_neumann_entropy",
    "entropy_small_K_expansion", "uncertainties", "purity_from_uncertainties",
    "effective_temperature", "concurrence_from_correlation_energy",
    "correlation_energy_from_concurrence", "entropy_vs_correlation_energy",
    "fidelity_vs_entropy_curve",
    # separable geometry
    "GaussianSeparableState", "WavepacketCoefficients", "gaussian_overlap",
    "max_overlap", "a_low", "a_low_quadratic_coefficient", "generalized_overlap",
    "gaussian_energy_gap", "witness_expectation_ground",
    # distributions
    "EnergyDistribution", "chessboard_amplitude", "ground_state_amplitude",
    "gaussian_amplitude", "moshinsky_diagonal", "factorized_gaussian_diagonal",
    "legendre_distribution",
    # energetics
    "CumulantSeries", "partition_function", "cumulants", "ohmic_uncertainties",
    "beta_from_chi", "slope_ratio_R", "purity_from_energy_moments",
    "second_cumulant_sweep",
]

"""Information measures and entropy-convergence certificates.

Numerical toolkit for explicit densities and PMFs: differential/discrete
Shannon entropy, Kullback-Leibler discriminant, variation and Kolmogorov
distances, plus convergence certificates with explicit bound constants.
"""

from ._core import (
    Density,
    DiscretePmf,
    EntroconvError,
    SupportSpec,
    build_counterexample,
    build_heavy_tail,
    build_nnfs_region,
    build_two_cell,
    certify,
    continuous_scenarios,
    differential_entropy,
    discrete_entropy,
    discrete_kl,
    discrete_scenarios,
    discrete_variation,
    kl_decomposition_check,
    kl_divergence,
    kolmogorov_distance,
    pinsker_check,
    variation_distance,
)

__all__ = [
    "Density",
    "DiscretePmf",
    "EntroconvError",
    "SupportSpec",
    "build_counterexample",
    "build_heavy_tail",
    "build_nnfs_region",
    "build_two_cell",
    "certify",
    "continuous_scenarios",
    "differential_entropy",
    "discrete_entropy",
    "discrete_kl",
    "discrete_scenarios",
    "discrete_variation",
    "kl_decomposition_check",
    "kl_divergence",
    "kolmogorov_distance",
    "pinsker_check",
    "variation_distance",
]

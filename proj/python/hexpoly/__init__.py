"""Exact computations for the hexagonal polygon model."""

from ._hexpoly import (
    __version__,
    brute_partition_function,
    classify,
    correlation,
    fourier_kinv,
    lambda_estimate,
    m_inf_squared,
    partition_function,
    phase_boundaries,
    spectral_curve,
    torus_min,
    uvst,
)

__all__ = [
    "__version__",
    "brute_partition_function",
    "classify",
    "correlation",
    "fourier_kinv",
    "lambda_estimate",
    "m_inf_squared",
    "partition_function",
    "phase_boundaries",
    "spectral_curve",
    "torus_min",
    "uvst",
]

"""Optimal recovery of integrals of set-valued functions."""

from ._setrec import (
    KnotSet,
    Modulus,
    SetTrajectory,
    Weight,
    active_indices,
    asymptotic_constant,
    cell_weights,
    hausdorff,
    integrate,
    midpoint_knots,
    noisy_error_value,
    omega_big,
    omega_big_inv,
    optimize_knots,
    power_weight_error_estimate,
    recover,
    run_selftest,
    uniform_optimal_error,
    worst_case_error,
)

__all__ = [
    "KnotSet",
    "Modulus",
    "SetTrajectory",
    "Weight",
    "active_indices",
    "asymptotic_constant",
    "cell_weights",
    "hausdorff",
    "integrate",
    "midpoint_knots",
    "noisy_error_value",
    "omega_big",
    "omega_big_inv",
    "optimize_knots",
    "power_weight_error_estimate",
    "recover",
    "run_selftest",
    "uniform_optimal_error",
    "worst_case_error",
]

"""Interpolating estimators, Fourier aliasing closed forms and bound curves."""

from ._core import (
    InterpError,
    basis_pursuit,
    closed_form_weighted_solution,
    contamination,
    hybrid_lasso,
    ideal_mse_lower_gaussian,
    ideal_mse_upper_gaussian,
    lasso,
    min_l2_interpolate,
    min_norm_solve,
    omp,
    run_experiment,
    sqrt_lasso,
    survival,
)

__all__ = [
    "InterpError",
    "basis_pursuit",
    "closed_form_weighted_solution",
    "contamination",
    "hybrid_lasso",
    "ideal_mse_lower_gaussian",
    "ideal_mse_upper_gaussian",
    "lasso",
    "min_l2_interpolate",
    "min_norm_solve",
    "omp",
    "run_experiment",
    "sqrt_lasso",
    "survival",
]

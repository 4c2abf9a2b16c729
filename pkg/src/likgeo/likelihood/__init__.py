"""Likelihood ideals of discrete models and their invariants."""

from .constructions import (
    SATURATION_MODES,
    LikelihoodProblem,
    augmented_jacobian,
    independence_likelihood,
    independence_order,
    independence_parametrization,
    joint_independence_likelihood,
    lagrange_likelihood,
    merged_route,
    toric_likelihood,
)
from .invariants import MLDegreeError, dimension_check, fiber_size, hardy_weinberg_mle, ml_degree, total_degree

__all__ = [
    "LikelihoodProblem",
    "SATURATION_MODES",
    "augmented_jacobian",
    "lagrange_likelihood",
    "toric_likelihood",
    "independence_likelihood",
    "independence_order",
    "independence_parametrization",
    "joint_independence_likelihood",
    "merged_route",
    "ml_degree",
    "fiber_size",
    "dimension_check",
    "total_degree",
    "hardy_weinberg_mle",
    "MLDegreeError",
]

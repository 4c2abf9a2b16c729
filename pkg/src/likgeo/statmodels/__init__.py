"""Contingency tables, log-linear and graphical models, toric and Segre ideals."""

from .loglinear import GeneratorSet, Graph, ToricMatrix, cliques, graphical_matrix, loglinear_matrix
from .shape import (
    MarginalForm,
    Shape,
    augment_with_marginals,
    check_partition,
    flattening,
    merge_partition,
    merge_renaming,
    total_sum,
)
from .toric import ModelWarning, kernel_basis, lattice_ideal, segre_ideal, toric_ideal

__all__ = [
    "Shape",
    "MarginalForm",
    "ToricMatrix",
    "GeneratorSet",
    "Graph",
    "flattening",
    "augment_with_marginals",
    "loglinear_matrix",
    "graphical_matrix",
    "cliques",
    "toric_ideal",
    "lattice_ideal",
    "kernel_basis",
    "segre_ideal",
    "merge_partition",
    "merge_renaming",
    "check_partition",
    "total_sum",
    "ModelWarning",
]

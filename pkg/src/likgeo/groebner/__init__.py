"""Groebner bases, elimination, saturation and Hilbert series."""

from .hilbert import HilbertData, hilbert, vertex_cover_codim
from .ideal import (
    GroebnerCheck,
    Ideal,
    buchberger,
    eliminate,
    groebner_basis,
    ideal_equals,
    interreduce,
    intersect,
    is_groebner,
    minimalize,
    normal_form,
    reduces_to_zero,
    saturate,
    saturate_by_ideal,
)
from .kernel import BACKEND

__all__ = [
    "BACKEND",
    "GroebnerCheck",
    "HilbertData",
    "Ideal",
    "buchberger",
    "eliminate",
    "groebner_basis",
    "hilbert",
    "ideal_equals",
    "interreduce",
    "intersect",
    "is_groebner",
    "minimalize",
    "normal_form",
    "reduces_to_zero",
    "saturate",
    "saturate_by_ideal",
    "vertex_cover_codim",
]

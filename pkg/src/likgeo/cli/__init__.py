"""Command-line front end: spec parsing, dispatch, reports and benchmarks."""

from .report import IdealReport, MethodError, build_likelihood, ideal_from_report, model_ideal, run
from .spec import ModelSpec, SpecError, load_spec, parse_spec

__all__ = [
    "ModelSpec",
    "SpecError",
    "parse_spec",
    "load_spec",
    "IdealReport",
    "MethodError",
    "run",
    "build_likelihood",
    "model_ideal",
    "ideal_from_report",
]

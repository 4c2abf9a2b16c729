"""Exact multivariate polynomial arithmetic over the rationals."""

from fractions import Fraction as Rational

from .matrix import PolyMatrix, determinant, matrix_from_strings, minors, nonzero_minors
from .orders import EQUAL, GREATER, LESS, TermOrder, compare
from .parse import PolynomialSyntaxError, infer_context, parse_polynomial
from .poly import Polynomial, exact_div, format_coeff, variables
from .ring import ContextMismatch, VariableContext, flat_context


def arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    """Apply ``add``, ``sub`` or ``mul`` to two polynomials of one context."""
    a.ctx.check(b.ctx)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def substitute(f: Polynomial, assignment, target=None) -> Polynomial:
    return f.substitute(assignment, target)


__all__ = [
    "Rational",
    "VariableContext",
    "ContextMismatch",
    "flat_context",
    "TermOrder",
    "compare",
    "LESS",
    "EQUAL",
    "GREATER",
    "Polynomial",
    "PolyMatrix",
    "arith",
    "substitute",
    "minors",
    "nonzero_minors",
    "determinant",
    "exact_div",
    "format_coeff",
    "variables",
    "parse_polynomial",
    "infer_context",
    "PolynomialSyntaxError",
    "matrix_from_strings",
]

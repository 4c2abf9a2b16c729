"""Matrices of polynomials and their minors."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .poly import Polynomial, exact_div
from .ring import ContextMismatch, VariableContext


class PolyMatrix:
    """Rectangular grid of polynomials sharing one context.

    ``row_labels``/``col_labels`` are optional strings recording where a row
    or column came from (e.g. the joint state it is indexed by).
    """

    def __init__(self, ctx: VariableContext, entries: Sequence[Sequence[Polynomial]], row_labels=None, col_labels=None):
        rows = [list(r) for r in entries]
        width = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != width:
                raise ValueError("matrix rows must have equal length")
            for e in r:
                if not isinstance(e, Polynomial):
                    raise TypeError("matrix entries must be Polynomials")
                ctx.check(e.ctx)
        self.ctx = ctx
        self.rows = rows
        self.row_labels = list(row_labels) if row_labels is not None else None
        self.col_labels = list(col_labels) if col_labels is not None else None

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.ctx == other.ctx and self.rows == other.rows

    def transpose(self) -> "PolyMatrix":
        r, c = self.shape
        return PolyMatrix(self.ctx, [[self.rows[i][j] for i in range(r)] for j in range(c)], self.col_labels, self.row_labels)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(self.ctx, [[self.rows[i][j] for j in cols] for i in rows])

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        self.ctx.check(other.ctx)
        r, k = self.shape
        k2, c = other.shape
        if k != k2:
            raise ValueError("inner dimensions differ")
        zero = Polynomial.zero(self.ctx)
        out = []
        for i in range(r):
            row = []
            for j in range(c):
                acc = zero
                for t in range(k):
                    a, b = self.rows[i][t], other.rows[t][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.ctx, out, self.row_labels, other.col_labels)

    def to_strings(self) -> list[list[str]]:
        return [[str(e) for e in r] for r in self.rows]

    def __repr__(self):
        return "PolyMatrix(" + repr(self.to_strings()) + ")"


def determinant(rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Determinant by cofactor expansion up to 3x3, fraction-free Bareiss beyond."""
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    return _bareiss([list(r) for r in rows])


def _bareiss(m: list[list[Polynomial]]) -> Polynomial:
    n = len(m)
    ctx = m[0][0].ctx
    sign = 1
    prev = Polynomial.const(ctx, 1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Polynomial.zero(ctx)
        piv = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = piv * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = exact_div(num, prev) if not prev.is_constant() else num * (1 / _as_fraction(prev))
        prev = piv
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def _as_fraction(p: Polynomial):
    from fractions import Fraction

    return Fraction(p.constant_value())


def minors(m: PolyMatrix, k: int) -> list[Polynomial]:
    """All ``k x k`` minors.

    Row subsets ascend lexicographically, then column subsets; zero minors
    are kept so positions line up with the enumeration.
    """
    r, c = m.shape
    if not 1 <= k <= min(r, c):
        raise ValueError(f"minor size {k} out of range for a {r}x{c} matrix")
    out = []
    for rs in combinations(range(r), k):
        sub = [m.rows[i] for i in rs]
        for cs in combinations(range(c), k):
            out.append(determinant([[row[j] for j in cs] for row in sub]))
    return out


def nonzero_minors(m: PolyMatrix, k: int) -> list[Polynomial]:
    """Distinct nonzero ``k x k`` minors up to sign, first occurrence kept."""
    seen = set()
    out = []
    for f in minors(m, k):
        if f.is_zero():
            continue
        if f in seen or -f in seen:
            continue
        seen.add(f)
        out.append(f)
    return out


def matrix_from_strings(ctx: VariableContext, rows) -> PolyMatrix:
    from .parse import parse_polynomial

    return PolyMatrix(ctx, [[parse_polynomial(ctx, str(e)) for e in r] for r in rows])


__all__ = ["PolyMatrix", "determinant", "minors", "nonzero_minors", "matrix_from_strings", "ContextMismatch"]

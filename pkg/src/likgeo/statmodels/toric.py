"""Toric ideals from integer matrices, and Segre ideals from flattenings."""

from __future__ import annotations

import warnings

from ..groebner import Ideal, saturate
from ..polyalgebra import Polynomial, VariableContext, nonzero_minors
from .loglinear import ToricMatrix
from .shape import Shape, flattening


class ModelWarning(UserWarning):
    pass


def kernel_basis(A: ToricMatrix | list[list[int]]) -> list[list[int]]:
    """Integer basis of ``{v : A v = 0}``.

    Unimodular row reduction of ``[A^T | I]``: once the left part is in
    echelon form, the right parts of the rows whose left part vanished span
    the kernel lattice.
    """
    rows = A.entries if isinstance(A, ToricMatrix) else [list(r) for r in A]
    m, n = len(rows), len(rows[0])
    work = [[rows[i][j] for i in range(m)] + [int(k == j) for k in range(n)] for j in range(n)]
    top = 0
    for c in range(m):
        while True:
            live = [r for r in range(top, n) if work[r][c]]
            if not live:
                break
            piv = min(live, key=lambda r: abs(work[r][c]))
            work[top], work[piv] = work[piv], work[top]
            done = True
            for r in range(top + 1, n):
                q = work[r][c] // work[top][c]
                if q:
                    work[r] = [a - q * b for a, b in zip(work[r], work[top])]
                if work[r][c]:
                    done = False
            if done:
                top += 1
                break
        if top == n:
            break
    return _size_reduce([row[m:] for row in work[top:]])


def _size_reduce(basis: list[list[int]]) -> list[list[int]]:
    # greedy shortening by elementary moves b_i -> b_i -+ b_j, which keep a lattice basis
    basis = [list(b) for b in basis]
    norm = lambda v: sum(map(abs, v))
    improved = True
    while improved:
        improved = False
        for i in range(len(basis)):
            for j in range(len(basis)):
                if i == j:
                    continue
                for s in (1, -1):
                    w = [x - s * y for x, y in zip(basis[i], basis[j])]
                    if norm(w) < norm(basis[i]):
                        basis[i] = w
                        improved = True
    return basis


def _binomial(ctx: VariableContext, idx: list[int], v: list[int]) -> Polynomial:
    plus = [0] * ctx.nvars
    minus = [0] * ctx.nvars
    for i, x in zip(idx, v):
        if x > 0:
            plus[i] = x
        elif x < 0:
            minus[i] = -x
    return Polynomial(ctx, {ctx.pack(plus): 1, ctx.pack(minus): -1}) if plus != minus else Polynomial.zero(ctx)


def _p_context(A: ToricMatrix, ctx: VariableContext | None) -> tuple[VariableContext, list[int]]:
    names = A.p_names()
    if ctx is None:
        ctx = VariableContext(names, blocks={"p": names})
    try:
        idx = [ctx.index[nm] for nm in names]
    except KeyError as exc:
        raise ValueError(f"context lacks the variable {exc.args[0]}") from None
    return ctx, idx


def lattice_ideal(A: ToricMatrix, ctx: VariableContext | None = None) -> Ideal:
    """Binomials of a kernel lattice basis; generally smaller than the toric ideal."""
    ctx, idx = _p_context(A, ctx)
    gens = [_binomial(ctx, idx, v) for v in kernel_basis(A)]
    return Ideal(ctx, [g for g in gens if g])


def toric_ideal(A: ToricMatrix, ctx: VariableContext | None = None) -> Ideal:
    """Ideal of all binomials ``p^v - p^w`` with ``A v = A w``.

    The lattice-basis ideal is saturated by every ``p`` variable in turn.
    """
    if not isinstance(A, ToricMatrix):
        A = ToricMatrix(A)
    for j in range(A.ncols):
        if not any(A.column(j)):
            raise ValueError(f"column {j} of A is zero")
    if not A.has_equal_column_sums():
        raise ValueError("the columns of A must have equal sums")
    ctx, idx = _p_context(A, ctx)
    lat = lattice_ideal(A, ctx)
    if lat.is_zero():
        return lat
    xs = [Polynomial.var(ctx, i) for i in idx]
    return saturate(lat, xs)


def segre_ideal(shape: Shape, ctx: VariableContext | None = None) -> Ideal:
    """Sum of the 2x2-minor ideals of the single-variable flattenings."""
    ctx = ctx or shape.context(with_u=False)
    if shape.n == 1:
        warnings.warn("a one-variable table has no independence constraints", ModelWarning, stacklevel=2)
        return Ideal(ctx, [])
    gens: list[Polynomial] = []
    seen = set()
    for i in range(1, shape.n + 1):
        for g in nonzero_minors(flattening(shape, [i], ctx), 2):
            key = g.monic()
            if key not in seen:
                seen.add(key)
                gens.append(g)
    return Ideal(ctx, gens)

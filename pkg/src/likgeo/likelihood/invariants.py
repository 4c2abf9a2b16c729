"""ML degree by fiber counting, and dimension of a likelihood ideal."""

from __future__ import annotations

import random
from fractions import Fraction

from ..groebner import Ideal, hilbert
from ..polyalgebra import Polynomial, TermOrder, VariableContext


class MLDegreeError(RuntimeError):
    pass


def _pu_blocks(ctx: VariableContext) -> tuple[tuple[int, ...], tuple[int, ...]]:
    p, u = ctx.block("p"), ctx.block("u")
    if not p or len(p) != len(u):
        raise ValueError("likelihood ideals live in a ring with p and u blocks of equal size")
    return p, u


def fiber_size(L: Ideal, rng: random.Random) -> dict:
    """Count the points of one random fiber of ``L`` over the data space.

    ``u`` gets random integers in ``[1, 10^4]``; the fiber is cut by a random
    affine chart ``c . p = 1`` and its points are counted as the number of
    standard monomials of a Groebner basis.
    """
    ctx = L.ctx
    pidx, uidx = _pu_blocks(ctx)
    pnames = [ctx.names[i] for i in pidx]
    pctx = VariableContext(pnames, blocks={"p": pnames})
    uvals = {ctx.names[i]: rng.randint(1, 10**4) for i in uidx}
    coeffs = [rng.randint(1, 100) for _ in pidx]
    gens = [g.substitute(uvals, pctx) for g in L.generators]
    chart = sum((Polynomial.var(pctx, nm) * c for nm, c in zip(pnames, coeffs)), Polynomial.zero(pctx)) - 1
    fiber = Ideal(pctx, gens + [chart])
    order = TermOrder.grevlex(pctx.nvars)
    gb = fiber.gb(order)
    diag = {"u": uvals, "chart": coeffs, "gb_size": len(gb)}
    if len(gb) == 1 and gb[0].is_constant():
        diag["count"] = 0
        return diag
    data = hilbert(fiber.initial_ideal(order))
    if data.krull_dimension > 0:
        raise MLDegreeError(f"specialized fiber has dimension {data.krull_dimension - 1} > 0; data not generic or ideal not a likelihood ideal")
    diag["count"] = data.degree
    return diag


def ml_degree(L: Ideal, seed: int = 0) -> tuple[int, dict]:
    """ML degree as the size of a generic fiber, confirmed by a second run.

    Both runs use their own seeded generator; a disagreement raises
    :class:`MLDegreeError` so the caller can retry with another seed.
    """
    first = fiber_size(L, random.Random(seed))
    second = fiber_size(L, random.Random(seed + 7919))
    if first["count"] != second["count"]:
        raise MLDegreeError(f"fiber counts disagree ({first['count']} vs {second['count']}); retry with another seed")
    if first["count"] == 0:
        raise MLDegreeError("random fiber is empty")
    return first["count"], {"runs": [first, second], "seed": seed}


def dimension_check(L: Ideal, order: TermOrder | None = None) -> int:
    """Dimension of ``V(L)`` inside ``P^n x P^n``.

    Read off the initial ideal: the Krull dimension of the quotient minus two,
    one for each projective factor.
    """
    _pu_blocks(L.ctx)
    if order is None:
        cached = L.cached_gb
        order = cached[1] if cached else TermOrder.grevlex(L.ctx.nvars)
    data = hilbert(L.initial_ideal(order))
    return data.krull_dimension - 2


def total_degree(L: Ideal, order: TermOrder | None = None) -> int:
    """Degree of ``L`` under the single total grading of the ambient ring."""
    order = order or TermOrder.grevlex(L.ctx.nvars)
    if not order.is_graded:
        raise ValueError("degree needs a degree-compatible order")
    return hilbert(L.initial_ideal(order)).degree


def hardy_weinberg_mle(u) -> list[Fraction]:
    """Exact MLE on the Hardy-Weinberg curve for counts ``u = (u0, u1, u2)``."""
    u0, u1, u2 = (Fraction(x) for x in u)
    theta = (u1 + 2 * u2) / (2 * (u0 + u1 + u2))
    return [(1 - theta) ** 2, 2 * theta * (1 - theta), theta**2]

"""Likelihood ideals by Lagrange multipliers, by the toric construction and
by explicit minors for complete and joint independence models."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..groebner import Ideal, hilbert, ideal_equals, saturate, saturate_by_ideal
from ..polyalgebra import Polynomial, PolyMatrix, TermOrder, VariableContext, flat_context, nonzero_minors
from ..statmodels import Shape, ToricMatrix, augment_with_marginals, check_partition, merge_partition, merge_renaming, toric_ideal

log = logging.getLogger(__name__)

SATURATION_MODES = ("full", "pplus")


@dataclass
class LikelihoodProblem:
    """A projective model in ``p`` together with the paired ``u`` ring.

    ``ctx`` carries blocks ``"p"`` and ``"u"`` of equal size; ``model`` lives
    in ``ctx`` and only involves ``p`` variables.
    """

    ctx: VariableContext
    model: Ideal
    shape: Shape | None = None
    toric: ToricMatrix | None = None
    singular_locus: Ideal | None = None
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        p, u = self.ctx.block("p"), self.ctx.block("u")
        if not p or len(p) != len(u):
            raise ValueError("context needs p and u blocks of equal size")
        if self.model.ctx != self.ctx:
            self.model = self.model.to_context(self.ctx)
        pset = set(p)
        for g in self.model.generators:
            if not g.variables() <= pset:
                raise ValueError(f"model generator {g} involves non-p variables")
            if not g.is_homogeneous():
                raise ValueError(f"model generator {g} is not homogeneous")

    @classmethod
    def flat(cls, size: int, generators: Iterable = (), **kw) -> "LikelihoodProblem":
        """Model in ``p0..p{size-1}`` given by polynomials or strings."""
        ctx = flat_context(size)
        gens = [Polynomial.parse(ctx, g) if isinstance(g, str) else g.to_context(ctx) for g in generators]
        return cls(ctx, Ideal(ctx, gens), **kw)

    @classmethod
    def from_shape(cls, shape: Shape, model: Ideal | None = None, **kw) -> "LikelihoodProblem":
        ctx = shape.context()
        if model is None:
            model = Ideal(ctx, [])
        return cls(ctx, model.to_context(ctx), shape=shape, **kw)

    @property
    def p(self) -> list[Polynomial]:
        return [Polynomial.var(self.ctx, i) for i in self.ctx.block("p")]

    @property
    def u(self) -> list[Polynomial]:
        return [Polynomial.var(self.ctx, i) for i in self.ctx.block("u")]

    @property
    def size(self) -> int:
        return len(self.ctx.block("p"))

    def p_context(self) -> VariableContext:
        names = [self.ctx.names[i] for i in self.ctx.block("p")]
        return VariableContext(names, blocks={"p": names})

    def p_plus(self) -> Polynomial:
        return sum(self.p[1:], self.p[0])

    def arrangement(self, mode: str = "full") -> list[Polynomial]:
        """Linear factors of the hyperplane arrangement ``p_0 ... p_n p_+``."""
        if mode not in SATURATION_MODES:
            raise ValueError(f"saturation mode must be one of {SATURATION_MODES}")
        if mode == "pplus":
            return [self.p_plus()]
        return self.p + [self.p_plus()]

    def codimension(self) -> int:
        """Codimension of the model, read off the initial ideal of ``I_M``."""
        if self.model.is_zero():
            return 0
        pctx = self.p_context()
        mp = self.model.to_context(pctx)
        if mp.is_unit():
            raise ValueError("the model ideal is the unit ideal")
        data = hilbert(mp.initial_ideal(TermOrder.grevlex(pctx.nvars)))
        if data.projective_dimension < 0:
            raise ValueError("the model is empty in projective space")
        return (self.size - 1) - data.projective_dimension


def augmented_jacobian(prob: LikelihoodProblem) -> PolyMatrix:
    """Rows ``u``, ``p`` and ``p_j * df_i/dp_j`` for each model generator."""
    ctx = prob.ctx
    pidx = ctx.block("p")
    rows = [prob.u, prob.p]
    labels = ["u", "p"]
    for k, f in enumerate(prob.model.generators):
        rows.append([Polynomial.var(ctx, j) * f.diff(j) for j in pidx])
        labels.append(f"f{k}")
    cols = [ctx.names[j] for j in pidx]
    return PolyMatrix(ctx, rows, labels, cols)


def lagrange_likelihood(prob: LikelihoodProblem, saturation: str = "full", minor_size: str = "rank", method: str = "auto") -> Ideal:
    """Likelihood ideal by Lagrange multipliers.

    The critical points are where the augmented Jacobian has rank at most
    ``codim + 1``.  ``minor_size="rank"`` adds the ``(codim+2)``-minors
    expressing exactly that; ``"literal"`` adds ``(codim+1)``-minors instead.
    The sum with the model ideal is saturated by the coordinate hyperplanes
    and ``p_+`` (or by ``p_+`` alone), then by the optional singular locus.
    """
    if minor_size not in ("rank", "literal"):
        raise ValueError("minor_size must be 'rank' or 'literal'")
    t0 = time.perf_counter()
    codim = prob.codimension()
    jac = augmented_jacobian(prob)
    k = codim + 2 if minor_size == "rank" else codim + 1
    rows, cols = jac.shape
    mins = nonzero_minors(jac, k) if k <= min(rows, cols) else []
    pre = Ideal(prob.ctx, prob.model.generators + mins)
    t1 = time.perf_counter()
    out = saturate(pre, prob.arrangement(saturation), method=method)
    if prob.singular_locus is not None and not prob.singular_locus.is_zero():
        out = saturate_by_ideal(out, prob.singular_locus.to_context(prob.ctx), method=method)
    t2 = time.perf_counter()
    out.info.update(construction="lagrange", codimension=codim, minor_size=k, minors=len(mins), pre_saturation=pre, saturation=saturation)
    out.info["timings"] = {"build": t1 - t0, "saturation": t2 - t1}
    return out


def _problem_for_matrix(A: ToricMatrix) -> VariableContext:
    if A.shape is not None:
        return A.shape.context()
    return flat_context(A.ncols)


def toric_likelihood(A: ToricMatrix, model: Ideal | None = None, saturation: str = "full", ctx: VariableContext | None = None, method: str = "auto") -> Ideal:
    """``(I_A + I_2(A M)) : (p_0 ... p_n p_+)^infinity`` with ``M = [u | p]``.

    ``model`` overrides ``I_A``; this covers rescaled toric models, whose
    ideal differs from ``toric_ideal(A)`` while ``A p ~ A u`` still
    characterises their critical points.
    """
    if not isinstance(A, ToricMatrix):
        A = ToricMatrix(A)
    t0 = time.perf_counter()
    ctx = ctx or _problem_for_matrix(A)
    pnames, unames = A.p_names(), A.u_names()
    try:
        p = [Polynomial.var(ctx, nm) for nm in pnames]
        u = [Polynomial.var(ctx, nm) for nm in unames]
    except KeyError:
        raise ValueError("A does not match the variables of the context") from None
    if model is None:
        pctx = VariableContext(pnames, blocks={"p": pnames})
        model = toric_ideal(A, pctx)
    model = model.to_context(ctx)
    zero = Polynomial.zero(ctx)
    au, ap = [], []
    for row in A.entries:
        au.append(sum((u[j] * a for j, a in enumerate(row) if a), zero))
        ap.append(sum((p[j] * a for j, a in enumerate(row) if a), zero))
    am = PolyMatrix(ctx, [[x, y] for x, y in zip(au, ap)], A.row_labels, ["Au", "Ap"])
    mins = nonzero_minors(am, 2)
    pre = Ideal(ctx, model.generators + mins)
    if saturation not in SATURATION_MODES:
        raise ValueError(f"saturation mode must be one of {SATURATION_MODES}")
    pplus = sum(p[1:], p[0])
    factors = [pplus] if saturation == "pplus" else p + [pplus]
    t1 = time.perf_counter()
    out = saturate(pre, factors, method=method)
    t2 = time.perf_counter()
    out.info.update(construction="toric", pre_saturation=pre, model=model, am=am, minors=len(mins), saturation=saturation)
    out.info["timings"] = {"build": t1 - t0, "saturation": t2 - t1}
    return out


def independence_order(shape: Shape) -> TermOrder:
    """Lex with ``p`` variables by index tuple, then ``u`` variables."""
    return TermOrder.lex(2 * shape.size)


def _union_minors(mats: Sequence[PolyMatrix]) -> list[Polynomial]:
    gens, seen = [], set()
    for m in mats:
        for g in nonzero_minors(m, 2):
            key = g.monic()
            if key not in seen:
                seen.add(key)
                gens.append(g)
    return gens


def independence_likelihood(shape: Shape) -> tuple[Ideal, TermOrder]:
    """2x2 minors of every flattening augmented by its u-marginal column.

    The generators are recorded as a claimed Groebner basis for the returned
    lex order; :func:`likgeo.groebner.is_groebner` checks the claim.
    """
    if shape.n < 2:
        raise ValueError("complete independence needs at least two variables")
    t0 = time.perf_counter()
    ctx = shape.context()
    mats = [augment_with_marginals(shape, [i], ctx) for i in range(1, shape.n + 1)]
    ideal = Ideal(ctx, _union_minors(mats))
    order = independence_order(shape)
    ideal.claimed_gb = order
    ideal.info.update(construction="independence", matrices=mats)
    ideal.info["timings"] = {"build": time.perf_counter() - t0, "saturation": 0.0}
    return ideal, order


def joint_independence_likelihood(shape: Shape, partition, cross_check: bool = True) -> tuple[Ideal, TermOrder]:
    """Likelihood ideal of a joint independence model.

    Built directly from the augmented flattenings of the partition blocks.
    With ``cross_check`` the complete-independence ideal of the merged shape
    is renamed back and compared; a mismatch raises ``RuntimeError``.
    """
    blocks = check_partition(shape, partition)
    if len(blocks) < 2:
        raise ValueError("a single-block partition is the whole projective space")
    t0 = time.perf_counter()
    ctx = shape.context()
    mats = [augment_with_marginals(shape, b, ctx) for b in blocks]
    ideal = Ideal(ctx, _union_minors(mats))
    order = _transported_order(shape, blocks)
    ideal.claimed_gb = order
    ideal.info.update(construction="joint_independence", matrices=mats, partition=blocks)
    ideal.info["timings"] = {"build": time.perf_counter() - t0, "saturation": 0.0}
    if cross_check:
        merged_ideal = merged_route(shape, blocks)
        if not ideal_equals(ideal, merged_ideal):
            raise RuntimeError("direct and merged joint-independence constructions disagree")
        ideal.info["merged_route_agrees"] = True
    return ideal, order


def merged_route(shape: Shape, partition) -> Ideal:
    """Complete-independence ideal of the merged shape, renamed to ``shape``'s variables."""
    merged, _ = merge_partition(shape, partition)
    rename = merge_renaming(shape, partition)
    mideal, _ = independence_likelihood(merged)
    mctx = merged.context()
    ctx = shape.context()
    assignment = {nm: Polynomial.var(ctx, rename[nm]) for nm in mctx.names}
    return Ideal(ctx, [g.substitute(assignment, ctx) for g in mideal.generators])


def _transported_order(shape: Shape, blocks) -> TermOrder:
    # lex order of the merged table, pulled back to the original variables
    merged, bij = merge_partition(shape, blocks)
    D = shape.size
    rank = {t: i for i, t in enumerate(merged.states)}
    pos = sorted(range(D), key=lambda i: rank[bij[shape.states[i]]])
    return TermOrder.lex(2 * D, pos + [D + i for i in pos])


def independence_parametrization(shape: Shape, ctx: VariableContext | None = None) -> dict[str, Polynomial]:
    """Closed-form MLE with denominators cleared: ``p_s -> prod_k u_{..+ s_k +..}``."""
    from ..statmodels import MarginalForm

    ctx = ctx or shape.context()
    margins = {}
    for k in range(1, shape.n + 1):
        for x in range(1, shape.dims[k - 1] + 1):
            margins[(k, x)] = MarginalForm((k,), (x,), "u").polynomial(shape, ctx)
    out = {}
    for s in shape.states:
        val = Polynomial.const(ctx, 1)
        for k, x in enumerate(s, start=1):
            val = val * margins[(k, x)]
        out[shape.name(s, "p")] = val
    return out

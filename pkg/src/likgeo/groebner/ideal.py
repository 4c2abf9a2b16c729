"""Ideals, reduced Groebner bases and the operations built on them."""

from __future__ import annotations

import logging
from fractions import Fraction
from heapq import heappop, heappush
from typing import Iterable, Sequence, Union

from ..polyalgebra import Polynomial, TermOrder, VariableContext
from ..polyalgebra.ring import ContextMismatch
from . import kernel as K
from .engine import Buchberger, from_engine, to_engine

log = logging.getLogger(__name__)


class Ideal:
    """Generators in one context plus cached reduced Groebner bases.

    The zero polynomial is dropped from the generator list, so the zero ideal
    has no generators.
    """

    def __init__(self, ctx: VariableContext, generators: Iterable[Polynomial] = ()):
        gens = []
        for g in generators:
            ctx.check(g.ctx)
            if not g.is_zero():
                gens.append(g)
        self.ctx = ctx
        self.generators = gens
        self._gb: dict[TermOrder, list[Polynomial]] = {}
        self.claimed_gb: TermOrder | None = None
        self.info: dict = {}  # provenance recorded by constructions

    def __repr__(self):
        return f"Ideal({len(self.generators)} generators in {self.ctx.nvars} variables)"

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __add__(self, other: "Ideal") -> "Ideal":
        self.ctx.check(other.ctx)
        return Ideal(self.ctx, self.generators + other.generators)

    @property
    def default_order(self) -> TermOrder:
        return TermOrder.grevlex(self.ctx.nvars)

    @property
    def cached_gb(self) -> tuple[list[Polynomial], TermOrder] | None:
        """Most recently cached ``(basis, order)``, if any."""
        if not self._gb:
            return None
        order = next(reversed(self._gb))
        return self._gb[order], order

    def gb(self, order: TermOrder | None = None) -> list[Polynomial]:
        order = order or self.default_order
        if order not in self._gb:
            self._gb[order] = groebner_basis(self.generators, order, self.ctx)
        return self._gb[order]

    def set_gb(self, basis: list[Polynomial], order: TermOrder):
        self._gb[order] = basis

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        if self.is_zero():
            return False
        gb = self.gb(self._any_order())
        return len(gb) == 1 and gb[0].is_constant()

    def _any_order(self) -> TermOrder:
        return next(reversed(self._gb)) if self._gb else self.default_order

    def contains(self, f: Polynomial, order: TermOrder | None = None) -> bool:
        if f.is_zero():
            return True
        if self.is_zero():
            return False
        order = order or self._any_order()
        return reduces_to_zero(f, self.gb(order), order)

    def leading_monomials(self, order: TermOrder | None = None) -> list[tuple[int, ...]]:
        order = order or self._any_order()
        return [g.leading_term(order)[1] for g in self.gb(order)]

    def initial_ideal(self, order: TermOrder | None = None) -> "Ideal":
        ctx = self.ctx
        return Ideal(ctx, [Polynomial.from_terms(ctx, [(1, e)]) for e in self.leading_monomials(order)])

    def to_context(self, ctx: VariableContext) -> "Ideal":
        """The same generators in another context, matched by variable name."""
        return Ideal(ctx, [g.to_context(ctx) for g in self.generators])

    def homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)


# --------------------------------------------------------------------------
# Groebner bases


def _engine_run(polys: Sequence[Polynomial], order: TermOrder, ctx: VariableContext) -> Buchberger:
    bb = Buchberger(ctx, order)
    key = bb.key
    items = []
    for p in polys:
        ctx.check(p.ctx)
        if p.is_zero():
            continue
        d = to_engine(p)
        lm = K.leading(d, key)
        items.append((ctx.degree_of(lm), key[lm], len(items), d))
    items.sort(key=lambda t: t[:3])
    for *_, d in items:
        bb.add(d)
    bb.run()
    return bb


def groebner_basis(polys: Sequence[Polynomial], order: TermOrder, ctx: VariableContext | None = None) -> list[Polynomial]:
    """Reduced Groebner basis, monic, sorted by leading monomial ascending."""
    if ctx is None:
        if not polys:
            raise ValueError("context required for an empty generator list")
        ctx = polys[0].ctx
    if all(p.is_zero() for p in polys):
        return []
    bb = _engine_run(polys, order, ctx)
    return [from_engine(ctx, d, lm) for lm, d in bb.reduced()]


def buchberger(ideal: Union[Ideal, Sequence[Polynomial]], order: TermOrder | None = None) -> list[Polynomial]:
    """Reduced Groebner basis of an ideal (cached on :class:`Ideal` inputs)."""
    if isinstance(ideal, Ideal):
        return ideal.gb(order)
    polys = list(ideal)
    if not polys:
        return []
    order = order or TermOrder.grevlex(polys[0].ctx.nvars)
    return groebner_basis(polys, order)


def _monic_divisors(divisors, order):
    out = []
    for g in divisors:
        if g.is_zero():
            continue
        c, e = g.leading_term(order)
        out.append((g.ctx.pack(e), g.monic(order)))
    return out


def normal_form(f: Polynomial, divisors: Sequence[Polynomial], order: TermOrder) -> Polynomial:
    """Remainder of multivariate division of ``f`` by ``divisors``.

    Reducers are tried in list order; ``f`` minus the result lies in the
    ideal they generate and no term of the result is divisible by any
    leading term.
    """
    ctx = f.ctx
    for g in divisors:
        ctx.check(g.ctx)
    divs = _monic_divisors(divisors, order)
    if not divs:
        return f
    key = order.keycache(ctx)
    guard = ctx.guard
    lms = [lm for lm, _ in divs]
    h: dict = dict(f.raw)
    rem: dict = {}
    heap = [(-key[m], m) for m in h]
    heap.sort()
    while heap:
        m = heappop(heap)[1]
        c = h.get(m)
        if c is None:
            continue
        i = K.find_divisor(m, lms, guard)
        if i < 0:
            rem[m] = c
            del h[m]
            continue
        q = m - lms[i]
        for mg, cg in divs[i][1].raw.items():
            mm = mg + q
            v = h.get(mm)
            if v is None:
                h[mm] = -c * cg
                heappush(heap, (-key[mm], mm))
            else:
                v = v - c * cg
                if v:
                    h[mm] = v
                else:
                    del h[mm]
    return Polynomial(ctx, rem)


def reduces_to_zero(f: Polynomial, basis: Sequence[Polynomial], order: TermOrder) -> bool:
    """Fast membership test against a Groebner basis (fraction-free kernel)."""
    if f.is_zero():
        return True
    if not basis:
        return False
    ctx = f.ctx
    key = order.keycache(ctx)
    lms, polys, lcs = [], [], []
    for g in basis:
        d = to_engine(g)
        lm = K.leading(d, key)
        lms.append(lm)
        polys.append(d)
        lcs.append(d[lm])
    return not K.reduce_poly(to_engine(f), lms, polys, lcs, key, ctx.guard, True)


def interreduce(basis: Sequence[Polynomial], order: TermOrder) -> list[Polynomial]:
    """Reduced Groebner basis from a set already known to be one.

    Elements whose leading monomial is divisible by another's are dropped,
    then each tail is reduced by the rest.  Output matches
    :func:`groebner_basis`: monic, sorted by leading monomial ascending.
    """
    basis = [g.monic(order) for g in basis if not g.is_zero()]
    if not basis:
        return []
    ctx = basis[0].ctx
    key = order.keycache(ctx)
    lead = [ctx.pack(g.leading_term(order)[1]) for g in basis]
    keep = []
    for i, m in enumerate(lead):
        drop = False
        for j, other in enumerate(lead):
            if j == i or not ctx.divides(other, m):
                continue
            # equal leading monomials: keep the first occurrence only
            if other != m or j < i:
                drop = True
                break
        if not drop:
            keep.append(i)
    kept = [basis[i] for i in keep]
    out = []
    for k, g in enumerate(kept):
        others = kept[:k] + kept[k + 1 :]
        out.append(normal_form(g, others, order).monic(order))
    out.sort(key=lambda g: key[ctx.pack(g.leading_term(order)[1])])
    return out


class GroebnerCheck:
    """Outcome of :func:`is_groebner`; truthy when the set is a Groebner basis."""

    def __init__(self, ok: bool, pair=None, remainder: Polynomial | None = None, checked: int = 0, skipped: int = 0):
        self.ok = ok
        self.pair = pair
        self.remainder = remainder
        self.checked = checked
        self.skipped = skipped

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return f"GroebnerCheck(ok, checked={self.checked}, skipped={self.skipped})"
        return f"GroebnerCheck(failed at pair {self.pair}, remainder {self.remainder})"


def is_groebner(gens: Sequence[Polynomial], order: TermOrder) -> GroebnerCheck:
    """Check every S-pair of ``gens`` reduces to zero.

    Pairs with coprime leading monomials are skipped, as are pairs
    ``(i, j)`` admitting a ``k`` whose leading monomial divides the lcm while
    both ``lcm(i, k)`` and ``lcm(j, k)`` are proper divisors of it.  Pairs are
    visited in order of increasing lcm; the first failure is reported with
    its monic remainder.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return GroebnerCheck(True)
    ctx = gens[0].ctx
    key = order.keycache(ctx)
    guard = ctx.guard
    polys = [to_engine(g) for g in gens]
    lms = [K.leading(d, key) for d in polys]
    lcs = [d[lm] for d, lm in zip(polys, lms)]
    lcm, gcdm, divides = ctx.lcm, ctx.gcd, ctx.divides
    n = len(gens)
    pairs = []
    skipped = 0
    for i in range(n):
        for j in range(i + 1, n):
            if gcdm(lms[i], lms[j]) == 0:
                skipped += 1
                continue
            pairs.append((key[lcm(lms[i], lms[j])], i, j))
    pairs.sort()
    checked = 0
    for _, i, j in pairs:
        l_ij = lcm(lms[i], lms[j])
        chain = False
        lg = l_ij | guard
        for k in range(n):
            if k == i or k == j:
                continue
            if (lg - lms[k]) & guard != guard:
                continue
            if lcm(lms[i], lms[k]) != l_ij and lcm(lms[j], lms[k]) != l_ij:
                chain = True
                break
        if chain:
            skipped += 1
            continue
        checked += 1
        s = K.spoly(polys[i], lms[i], lcs[i], polys[j], lms[j], lcs[j], l_ij)
        r = K.reduce_poly(s, lms, polys, lcs, key, guard, True) if s else s
        if r:
            lead = K.leading(r, key)
            return GroebnerCheck(False, (i, j), from_engine(ctx, r, lead), checked, skipped)
    return GroebnerCheck(True, checked=checked, skipped=skipped)


# --------------------------------------------------------------------------
# elimination and saturation


def eliminate(ideal: Ideal, drop: Iterable[Union[str, int]]) -> Ideal:
    """Generators of ``ideal`` intersected with the subring without ``drop``."""
    ctx = ideal.ctx
    idx = sorted({ctx.index[v] if isinstance(v, str) else int(v) for v in drop})
    keep = [i for i in range(ctx.nvars) if i not in set(idx)]
    small = _subcontext(ctx, keep)
    if ideal.is_zero():
        return Ideal(small, [])
    order = TermOrder.elimination(ctx.nvars, idx)
    gb = ideal.gb(order)
    dropped = set(idx)
    kept = [g for g in gb if not (g.variables() & dropped)]
    out = Ideal(small, [g.to_context(small) for g in kept])
    # the survivors form a Groebner basis for the restricted order on the small ring
    inner = TermOrder.grevlex(len(keep))
    if out.generators:
        out.set_gb(sorted(out.generators, key=lambda p: inner.key(p.leading_term(inner)[1])), inner)
    return out


def _subcontext(ctx: VariableContext, keep: Sequence[int]) -> VariableContext:
    names = [ctx.names[i] for i in keep]
    blocks = {}
    for label, members in ctx.blocks.items():
        mem = [ctx.names[i] for i in members if i in set(keep)]
        if mem:
            blocks[label] = mem
    return VariableContext(names, blocks)


def _as_factors(f) -> list[Polynomial]:
    if isinstance(f, Polynomial):
        return [f]
    return list(f)


def _is_linear_form(f: Polynomial) -> bool:
    return f.is_homogeneous() and f.total_degree() == 1


def saturate(ideal: Ideal, f, method: str = "auto") -> Ideal:
    """``ideal : f^infinity``.

    ``f`` is a polynomial or a sequence of factors; factors are saturated
    one after another.  ``method`` is ``"rabinowitsch"`` (adjoin ``t`` with
    ``t*f - 1`` and eliminate ``t``), ``"revlex"`` (homogeneous ideal and a
    linear factor: Groebner basis in reverse lex with that form as the last
    variable, then divide out its powers) or ``"auto"``, which picks
    ``revlex`` whenever it applies.
    """
    if method not in ("auto", "rabinowitsch", "revlex"):
        raise ValueError(f"unknown saturation method {method!r}")
    factors = _as_factors(f)
    cur = ideal
    for fac in factors:
        ideal.ctx.check(fac.ctx)
        if fac.is_zero():
            raise ValueError("cannot saturate by the zero polynomial")
        if fac.is_constant():
            continue
        if cur.is_zero():
            continue
        use_revlex = method == "revlex" or (method == "auto" and _is_linear_form(fac) and cur.homogeneous())
        if use_revlex:
            if not (_is_linear_form(fac) and cur.homogeneous()):
                raise ValueError("revlex saturation needs a homogeneous ideal and a linear form")
            cur = _saturate_revlex(cur, fac)
        else:
            cur = _saturate_rabinowitsch(cur, fac)
    if cur is ideal:
        return cur
    return Ideal(cur.ctx, [g.monic() for g in cur.generators])


def _saturate_rabinowitsch(ideal: Ideal, f: Polynomial) -> Ideal:
    ctx = ideal.ctx
    t = ctx.fresh_name("t")
    big = ctx.extend([t])
    gens = [g.to_context(big) for g in ideal.generators]
    tf = Polynomial.var(big, t) * f.to_context(big) - 1
    res = eliminate(Ideal(big, gens + [tf]), [t])
    return Ideal(ctx, [g.to_context(ctx) for g in res.generators])


def _saturate_revlex(ideal: Ideal, f: Polynomial) -> Ideal:
    ctx = ideal.ctx
    lin = {}
    for c, e in f.terms():
        lin[e.index(1)] = Fraction(c)
    pivot = max(lin)  # last variable occurring in f
    c0 = lin[pivot]
    x = Polynomial.var(ctx, pivot)
    if len(lin) == 1:
        gens = ideal.generators
    else:
        # coordinates in which f becomes the pivot variable
        others = sum((Polynomial.var(ctx, j) * c for j, c in lin.items() if j != pivot), Polynomial.zero(ctx))
        forward = {pivot: (x - others) * (1 / c0)}
        gens = [g.substitute(forward) for g in ideal.generators]
    perm = [i for i in range(ctx.nvars) if i != pivot] + [pivot]
    order = TermOrder.grevlex(ctx.nvars, perm)
    gb = groebner_basis(gens, order, ctx)
    shift = 16 * (ctx.nvars - 1 - pivot)
    out = []
    for g in gb:
        low = min((m >> shift) & 0x7FFF for m in g.raw)
        if low:
            unit = low << shift
            g = Polynomial(ctx, {m - unit: c for m, c in g.raw.items()}, _trusted=True)
        out.append(g)
    if len(lin) == 1:
        return Ideal(ctx, out)
    back = {pivot: f}
    return Ideal(ctx, [g.substitute(back) for g in out])


def intersect(a: Ideal, b: Ideal) -> Ideal:
    """``a`` intersected with ``b`` via ``t*a + (1-t)*b`` and eliminating ``t``."""
    ctx = a.ctx
    ctx.check(b.ctx)
    if a.is_zero() or b.is_zero():
        return Ideal(ctx, [])
    t = ctx.fresh_name("t")
    big = ctx.extend([t])
    tv = Polynomial.var(big, t)
    gens = [tv * g.to_context(big) for g in a.generators] + [(1 - tv) * g.to_context(big) for g in b.generators]
    res = eliminate(Ideal(big, gens), [t])
    return Ideal(ctx, [g.to_context(ctx) for g in res.generators])


def saturate_by_ideal(ideal: Ideal, other: Ideal, method: str = "auto") -> Ideal:
    """``ideal : other^infinity`` as the intersection over generators of ``other``."""
    parts = [saturate(ideal, g, method) for g in other.generators]
    if not parts:
        return ideal
    out = parts[0]
    for p in parts[1:]:
        out = intersect(out, p)
    return out


def ideal_equals(a: Ideal, b: Ideal, order: TermOrder | None = None) -> bool:
    """Equality of ideals via reduced Groebner bases under one order."""
    a.ctx.check(b.ctx)
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    if {g.monic() for g in a.generators} == {g.monic() for g in b.generators}:
        return True
    if order is None:
        shared = [o for o in a._gb if o in b._gb]
        order = shared[-1] if shared else a.default_order
    return a.gb(order) == b.gb(order)


def minimalize(gens: Sequence[Polynomial], order: TermOrder | None = None) -> list[Polynomial]:
    """Minimal homogeneous generating subset, scanning by ascending degree.

    An element is kept iff it is not in the ideal of the elements kept
    before it; ties in degree keep the input order.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ctx = gens[0].ctx
    for g in gens:
        ctx.check(g.ctx)
        if not g.is_homogeneous():
            raise ValueError("minimalize needs homogeneous generators")
    order = order or TermOrder.grevlex(ctx.nvars)
    if not _graded(order):
        raise ValueError("minimalize needs a degree-compatible term order")
    ranked = sorted(range(len(gens)), key=lambda i: (gens[i].total_degree(), i))
    bb = Buchberger(ctx, order)
    kept = []
    for i in ranked:
        g = gens[i]
        deg = g.total_degree()
        bb.run(max_degree=deg)
        r = bb.reduce(to_engine(g))
        if not r:
            continue
        kept.append(g)
        bb.add(r, reduce=False)
    return kept


def _graded(order: TermOrder) -> bool:
    return order.is_graded


__all__ = [
    "Ideal",
    "ContextMismatch",
    "GroebnerCheck",
    "interreduce",
    "buchberger",
    "groebner_basis",
    "normal_form",
    "reduces_to_zero",
    "is_groebner",
    "eliminate",
    "saturate",
    "saturate_by_ideal",
    "intersect",
    "ideal_equals",
    "minimalize",
]

"""Buchberger's algorithm on integer-coefficient packed polynomials.

Pairs are managed with the Gebauer-Moeller update, which applies both the
coprime leading-term criterion and the chain criterion; the next pair is the
one with the smallest lcm under the term order (normal strategy).  Every
new basis element is made primitive.
"""

from __future__ import annotations

from fractions import Fraction
from heapq import heappop, heappush
from math import lcm as ilcm

from ..polyalgebra import Polynomial, TermOrder, VariableContext
from . import kernel as K


def to_engine(p: Polynomial) -> dict[int, int]:
    """Integer multiple of ``p`` with content 1 (sign left alone)."""
    den = 1
    for c in p.raw.values():
        if isinstance(c, Fraction):
            den = ilcm(den, c.denominator)
    d = {m: int(c * den) for m, c in p.raw.items()}
    g = K.content(d) if d else 1
    if g > 1:
        d = {m: c // g for m, c in d.items()}
    return d


def from_engine(ctx: VariableContext, d: dict[int, int], lead: int | None = None, monic: bool = True) -> Polynomial:
    if not d:
        return Polynomial.zero(ctx)
    if not monic:
        return Polynomial(ctx, dict(d), _trusted=True)
    lc = d[lead]
    if lc == 1:
        return Polynomial(ctx, dict(d), _trusted=True)
    out = {}
    for m, c in d.items():
        q = Fraction(c, lc)
        out[m] = q.numerator if q.denominator == 1 else q
    return Polynomial(ctx, out, _trusted=True)


class Buchberger:
    """Incremental Groebner basis computation.

    Generators are added with :meth:`add`; :meth:`run` processes pending
    S-pairs, optionally only those whose lcm has total degree at most
    ``max_degree`` (a valid truncation for homogeneous input under a graded
    order).
    """

    def __init__(self, ctx: VariableContext, order: TermOrder):
        self.ctx = ctx
        self.order = order
        self.key = order.keycache(ctx)
        self.guard = ctx.guard
        self.polys: list[dict[int, int]] = []
        self.lms: list[int] = []
        self.lcs: list[int] = []
        self.active: list[int] = []
        self.pairs: dict[tuple[int, int], int] = {}
        self.heap: list = []
        self.unit = False
        self.stats = {"pairs": 0, "zero": 0, "added": 0}
        self._red = ([], [], [])

    # reducers ----------------------------------------------------------
    def _refresh(self):
        act = self.active
        self._red = ([self.lms[i] for i in act], [self.polys[i] for i in act], [self.lcs[i] for i in act])

    def reduce(self, d: dict[int, int], full: bool = True) -> dict[int, int]:
        lms, polys, lcs = self._red
        if not lms:
            return dict(d)
        return K.reduce_poly(d, lms, polys, lcs, self.key, self.guard, full)

    # building ------------------------------------------------------------
    def add(self, d: dict[int, int], reduce: bool = True) -> int | None:
        """Reduce and insert a generator; returns its index or ``None`` if it vanished."""
        if self.unit:
            return None
        if reduce:
            d = self.reduce(d)
        if not d:
            self.stats["zero"] += 1
            return None
        lm = K.leading(d, self.key)
        d = K.make_primitive(d, lm)
        idx = len(self.polys)
        self.polys.append(d)
        self.lms.append(lm)
        self.lcs.append(d[lm])
        self.stats["added"] += 1
        if lm == 0:
            self.unit = True
            self.active = [idx]
            self.pairs.clear()
            self.heap.clear()
            self._refresh()
            return idx
        self._update(idx)
        self._refresh()
        return idx

    def _update(self, ih: int):
        ctx = self.ctx
        lms = self.lms
        divides = ctx.divides
        lcm = ctx.lcm
        mh = lms[ih]

        def coprime(a, b):
            return ctx.gcd(a, b) == 0

        C = list(self.active)
        D: list[int] = []
        while C:
            ig = C.pop()
            l_hg = lcm(mh, lms[ig])
            if coprime(mh, lms[ig]):
                D.append(ig)
                continue
            dominated = False
            for ix in C:
                if divides(lcm(mh, lms[ix]), l_hg):
                    dominated = True
                    break
            if not dominated:
                for ix in D:
                    if divides(lcm(mh, lms[ix]), l_hg):
                        dominated = True
                        break
            if not dominated:
                D.append(ig)
        E = [ig for ig in D if not coprime(mh, lms[ig])]

        # chain criterion on the old pairs
        dead = []
        for (i1, i2), l12 in self.pairs.items():
            if divides(mh, l12) and lcm(lms[i1], mh) != l12 and lcm(lms[i2], mh) != l12:
                dead.append((i1, i2))
        for pr in dead:
            del self.pairs[pr]

        key = self.key
        for ig in E:
            l_ = lcm(mh, lms[ig])
            pr = (ig, ih) if ig < ih else (ih, ig)
            self.pairs[pr] = l_
            heappush(self.heap, (key[l_], pr[0], pr[1]))

        self.active = [ig for ig in self.active if not divides(mh, lms[ig])]
        self.active.append(ih)

    def run(self, max_degree: int | None = None):
        ctx = self.ctx
        heap = self.heap
        while heap and not self.unit:
            k, i, j = heap[0]
            l_ = self.pairs.get((i, j))
            if l_ is None:
                heappop(heap)
                continue
            if max_degree is not None and ctx.degree_of(l_) > max_degree:
                break
            heappop(heap)
            del self.pairs[(i, j)]
            self.stats["pairs"] += 1
            s = K.spoly(self.polys[i], self.lms[i], self.lcs[i], self.polys[j], self.lms[j], self.lcs[j], l_)
            self.add(s)
        return self

    def pending(self) -> int:
        return len(self.pairs)

    # results -------------------------------------------------------------
    def reduced(self) -> list[tuple[int, dict[int, int]]]:
        """Interreduced minimal basis as ``(leading monomial, primitive poly)``, ascending."""
        if self.unit:
            return [(0, {0: 1})]
        key = self.key
        act = sorted(self.active, key=lambda i: key[self.lms[i]])
        out = []
        for i in act:
            others = [a for a in act if a != i]
            d = self.polys[i]
            lm = self.lms[i]
            if others:
                # lm is irreducible modulo the others, so only the tail changes
                d = K.reduce_poly(
                    d,
                    [self.lms[a] for a in others],
                    [self.polys[a] for a in others],
                    [self.lcs[a] for a in others],
                    key,
                    self.guard,
                    True,
                )
                d = K.make_primitive(d, lm)
            out.append((lm, d))
        return out

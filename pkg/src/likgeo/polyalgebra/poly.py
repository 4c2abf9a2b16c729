"""Exact sparse multivariate polynomials over the rationals."""

from __future__ import annotations

from fractions import Fraction
from math import lcm as ilcm, gcd
from numbers import Rational
from typing import Iterable, Mapping, Sequence, Union

from .orders import TermOrder
from .ring import ContextMismatch, VariableContext

Coeff = Union[int, Fraction]


def _norm(c) -> Coeff:
    """Canonical coefficient: ``int`` when integral, reduced ``Fraction`` otherwise."""
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    raise TypeError(f"coefficients must be rational, got {type(c).__name__}")


def format_coeff(c: Coeff) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class Polynomial:
    """Immutable polynomial in a :class:`VariableContext`.

    Terms are kept in a dict from packed exponent to coefficient with no zero
    entries.  ``terms()`` yields them sorted descending under the context's
    active order, which is also the printed order.
    """

    __slots__ = ("ctx", "_d", "_sorted", "_hash")

    def __init__(self, ctx: VariableContext, terms: Mapping[int, Coeff] | None = None, *, _trusted=False):
        self.ctx = ctx
        if _trusted:
            self._d = terms
        else:
            d = {}
            for m, c in (terms or {}).items():
                c = _norm(c)
                if c:
                    d[m] = c
            self._d = d
        self._sorted = None
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def zero(cls, ctx) -> "Polynomial":
        return cls(ctx, {}, _trusted=True)

    @classmethod
    def const(cls, ctx, c) -> "Polynomial":
        c = _norm(c)
        return cls(ctx, {0: c} if c else {}, _trusted=True)

    @classmethod
    def var(cls, ctx, name: Union[str, int]) -> "Polynomial":
        i = ctx.index[name] if isinstance(name, str) else name
        return cls(ctx, {ctx.var(i): 1}, _trusted=True)

    @classmethod
    def from_terms(cls, ctx, terms: Iterable[tuple[Coeff, Sequence[int]]]) -> "Polynomial":
        d: dict[int, Coeff] = {}
        for c, exps in terms:
            m = ctx.pack(tuple(exps))
            d[m] = d.get(m, 0) + c
        return cls(ctx, d)

    @classmethod
    def parse(cls, ctx, text: str) -> "Polynomial":
        from .parse import parse_polynomial

        return parse_polynomial(ctx, text)

    # basic queries ------------------------------------------------------
    def __bool__(self):
        return bool(self._d)

    def is_zero(self) -> bool:
        return not self._d

    def __len__(self):
        return len(self._d)

    @property
    def raw(self) -> dict:
        """The packed term dict (read-only by convention)."""
        return self._d

    def terms(self, order: TermOrder | None = None) -> list[tuple[Coeff, tuple[int, ...]]]:
        """``(coefficient, exponents)`` pairs sorted descending."""
        if order is None or order == self.ctx.order:
            if self._sorted is None:
                self._sorted = self._sorted_terms(self.ctx.order)
            return list(self._sorted)
        return self._sorted_terms(order)

    def _sorted_terms(self, order):
        unpack = self.ctx.unpack
        items = [(order.key(unpack(m)), m, c) for m, c in self._d.items()]
        items.sort(reverse=True)
        return [(c, unpack(m)) for _, m, c in items]

    def leading_term(self, order: TermOrder | None = None) -> tuple[Coeff, tuple[int, ...]]:
        if not self._d:
            raise ValueError("zero polynomial has no leading term")
        order = order or self.ctx.order
        unpack = self.ctx.unpack
        m = max(self._d, key=lambda e: order.key(unpack(e)))
        return self._d[m], unpack(m)

    def monomials(self) -> list[tuple[int, ...]]:
        return [e for _, e in self.terms()]

    def coefficient(self, exps: Sequence[int]) -> Coeff:
        return self._d.get(self.ctx.pack(tuple(exps)), 0)

    def total_degree(self) -> int:
        if not self._d:
            return -1
        return max(self.ctx.degree_of(m) for m in self._d)

    def block_degrees(self, indices: Sequence[int]) -> set[int]:
        """Set of degrees in the given variables over all terms."""
        unpack = self.ctx.unpack
        return {sum(unpack(m)[i] for i in indices) for m in self._d}

    def is_homogeneous(self, indices: Sequence[int] | None = None) -> bool:
        if indices is None:
            return len({self.ctx.degree_of(m) for m in self._d}) <= 1
        return len(self.block_degrees(indices)) <= 1

    def is_bihomogeneous(self, blocks=("p", "u")) -> bool:
        return all(self.is_homogeneous(self.ctx.block(b)) for b in blocks)

    def variables(self) -> set[int]:
        acc = 0
        for m in self._d:
            acc |= m
        return {i for i, e in enumerate(self.ctx.unpack(acc)) if e} if acc else set()

    def is_monomial(self) -> bool:
        return len(self._d) == 1

    def is_constant(self) -> bool:
        return not self._d or (len(self._d) == 1 and 0 in self._d)

    def constant_value(self) -> Coeff:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self._d.get(0, 0)

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self.ctx.check(other.ctx)
            return other
        return Polynomial.const(self.ctx, other)

    def __add__(self, other):
        other = self._coerce(other)
        d = dict(self._d)
        for m, c in other._d.items():
            v = d.get(m, 0) + c
            if v:
                d[m] = _norm(v)
            else:
                d.pop(m, None)
        return Polynomial(self.ctx, d, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ctx, {m: -c for m, c in self._d.items()}, _trusted=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = _norm(other)
            if not c:
                return Polynomial.zero(self.ctx)
            return Polynomial(self.ctx, {m: _norm(v * c) for m, v in self._d.items()}, _trusted=True)
        self.ctx.check(other.ctx)
        a, b = self._d, other._d
        if len(a) < len(b):
            a, b = b, a
        d: dict[int, Coeff] = {}
        get = d.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = ma + mb
                d[m] = get(m, 0) + ca * cb
        return Polynomial(self.ctx, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            if not other.is_constant():
                raise TypeError("use exact_div for polynomial division")
            other = other.constant_value()
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.const(self.ctx, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ctx == other.ctx and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self._d == ({0: _norm(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx.names, frozenset(self._d.items())))
        return self._hash

    # transformations ----------------------------------------------------
    def normalized(self) -> "Polynomial":
        """Re-canonicalize (a fixpoint on every value built by this class)."""
        return Polynomial(self.ctx, dict(self._d))

    def monic(self, order: TermOrder | None = None) -> "Polynomial":
        if not self._d:
            return self
        c, _ = self.leading_term(order)
        return self * (Fraction(1) / Fraction(c))

    def primitive(self, order: TermOrder | None = None) -> "Polynomial":
        """Integer coefficients with content 1 and positive leading coefficient."""
        if not self._d:
            return self
        den = 1
        for c in self._d.values():
            if isinstance(c, Fraction):
                den = ilcm(den, c.denominator)
        ints = {m: int(c * den) for m, c in self._d.items()}
        g = 0
        for c in ints.values():
            g = gcd(g, c)
        lc, _ = self.leading_term(order)
        if lc < 0:
            g = -g
        return Polynomial(self.ctx, {m: c // g for m, c in ints.items()}, _trusted=True)

    def diff(self, var: Union[str, int]) -> "Polynomial":
        i = self.ctx.index[var] if isinstance(var, str) else var
        unit = self.ctx.var(i)
        shift = 16 * (self.ctx.nvars - 1 - i)
        d = {}
        for m, c in self._d.items():
            e = (m >> shift) & 0x7FFF
            if e:
                d[m - unit] = c * e
        return Polynomial(self.ctx, d, _trusted=True)

    def substitute(self, assignment: Mapping, target: VariableContext | None = None) -> "Polynomial":
        """Replace variables by polynomials or rationals.

        Keys are variable names or indices.  Unassigned variables are kept;
        with ``target`` given they are looked up by name there, so the result
        can move to a smaller or larger context.
        """
        ctx = self.ctx
        tgt = target or ctx
        images: dict[int, Polynomial] = {}
        for k, v in assignment.items():
            i = ctx.index[k] if isinstance(k, str) else int(k)
            if not 0 <= i < ctx.nvars:
                raise ContextMismatch(f"no variable with index {i}")
            if isinstance(v, Polynomial):
                tgt.check(v.ctx)
                images[i] = v
            else:
                images[i] = Polynomial.const(tgt, v)
        for i in range(ctx.nvars):
            if i not in images:
                name = ctx.names[i]
                if name in tgt.index:
                    images[i] = Polynomial.var(tgt, name)
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(i, e):
            key = (i, e)
            if key not in powers:
                powers[key] = images[i] ** e
            return powers[key]

        out: dict[int, Coeff] = {}
        for m, c in self._d.items():
            term = Polynomial.const(tgt, c)
            for i, e in enumerate(ctx.unpack(m)):
                if e:
                    if i not in images:
                        raise ContextMismatch(f"variable {ctx.names[i]} has no image in the target context")
                    term = term * power(i, e)
            for mm, cc in term._d.items():
                out[mm] = out.get(mm, 0) + cc
        return Polynomial(tgt, out)

    def evaluate(self, values: Mapping) -> Coeff:
        res = self.substitute(values)
        if not res.is_constant():
            raise ValueError("not every variable was assigned")
        return res.constant_value()

    def to_context(self, ctx: VariableContext) -> "Polynomial":
        """Re-express in another context, matching variables by name."""
        if ctx == self.ctx:
            return self
        src = self.ctx
        mapping = []
        for i, nm in enumerate(src.names):
            mapping.append(ctx.index.get(nm))
        d = {}
        for m, c in self._d.items():
            exps = [0] * ctx.nvars
            for i, e in enumerate(src.unpack(m)):
                if e:
                    j = mapping[i]
                    if j is None:
                        raise ContextMismatch(f"variable {src.names[i]} is missing from the target context")
                    exps[j] = e
            d[ctx.pack(exps)] = c
        return Polynomial(ctx, d, _trusted=True)

    # text ---------------------------------------------------------------
    def to_str(self, order: TermOrder | None = None) -> str:
        terms = self.terms(order)
        if not terms:
            return "0"
        names = self.ctx.names
        parts = []
        for k, (c, exps) in enumerate(terms):
            mono = "*".join(names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(exps) if e)
            neg = c < 0
            a = -c if neg else c
            if mono:
                body = mono if a == 1 else f"{format_coeff(a)}*{mono}"
            else:
                body = format_coeff(a)
            if k == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Polynomial({self.to_str()!r})"


def exact_div(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient ``f / g``; raises ``ArithmeticError`` if ``g`` does not divide ``f``."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    f.ctx.check(g.ctx)
    order = f.ctx.order
    key = order.keycache(f.ctx)
    gd = g.raw
    glm = max(gd, key=key.__getitem__)
    glc = Fraction(gd[glm])
    rem = dict(f.raw)
    quo: dict[int, Coeff] = {}
    ctx = f.ctx
    while rem:
        m = max(rem, key=key.__getitem__)
        if not ctx.divides(glm, m):
            raise ArithmeticError("inexact polynomial division")
        q = m - glm
        c = _norm(rem[m] / glc)
        quo[q] = c
        for mg, cg in gd.items():
            mm = mg + q
            v = rem.get(mm, 0) - c * cg
            if v:
                rem[mm] = v
            else:
                rem.pop(mm, None)
    return Polynomial(ctx, quo)


def variables(ctx: VariableContext, names: Iterable[str] | None = None) -> list[Polynomial]:
    names = ctx.names if names is None else names
    return [Polynomial.var(ctx, nm) for nm in names]

"""Parser for the polynomial text grammar.

Accepts what :meth:`Polynomial.to_str` prints (``3/2*p_1_1^2*u_2_1 - p0``)
plus parentheses, unary signs, ``**`` as a synonym for ``^`` and division by
rational constants.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import Polynomial
from .ring import VariableContext

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


class PolynomialSyntaxError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at column {pos + 1}: {text!r}")
        self.pos = pos
        self.text = text


def _tokenize(text: str):
    pos = 0
    out = []
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            j = pos
            while j < n and text[j].isspace():
                j += 1
            raise PolynomialSyntaxError("unexpected character", text, j)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            out.append(("num", int(m.group(1)), start))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), start))
        else:
            op = m.group(3)
            out.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    out.append(("end", None, n))
    return out


class _Parser:
    def __init__(self, ctx: VariableContext, text: str):
        self.ctx = ctx
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise PolynomialSyntaxError(msg, self.text, tok[2])

    def expr(self) -> Polynomial:
        result = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            tok = self.take()
            rhs = self.unary()
            if tok[1] == "*":
                result = result * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    self.error("division only by a nonzero constant", tok)
                result = result * (Fraction(1) / Fraction(rhs.constant_value()))
        return result

    def unary(self) -> Polynomial:
        tok = self.peek()
        if tok[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if tok[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.error("exponent must be a nonnegative integer", tok)
            return base ** tok[1]
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            return Polynomial.const(self.ctx, val)
        if kind == "name":
            if val not in self.ctx.index:
                self.error(f"unknown variable {val!r}", tok)
            return Polynomial.var(self.ctx, val)
        if tok[:2] == ("op", "("):
            inner = self.expr()
            if self.take()[:2] != ("op", ")"):
                self.error("expected ')'", self.toks[self.i - 1])
            return inner
        self.error("unexpected token", tok)


def parse_polynomial(ctx: VariableContext, text: str) -> Polynomial:
    p = _Parser(ctx, text)
    if p.peek()[0] == "end":
        p.error("empty polynomial")
    result = p.expr()
    if p.peek()[0] != "end":
        p.error("trailing input")
    return result


def infer_context(texts, blocks=None) -> VariableContext:
    """Context holding every identifier used in ``texts``, in order of first use.

    Names ``p...``/``u...`` are sorted into the ``p`` and ``u`` blocks.
    """
    seen: list[str] = []
    for t in texts:
        for kind, val, _ in _tokenize(t):
            if kind == "name" and val not in seen:
                seen.append(val)
    ps = sorted((s for s in seen if s.startswith("p")), key=_natural)
    us = sorted((s for s in seen if s.startswith("u")), key=_natural)
    rest = [s for s in seen if s not in ps and s not in us]
    return VariableContext(ps + us + rest, blocks or {"p": ps, "u": us})


def _natural(name: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", name)]

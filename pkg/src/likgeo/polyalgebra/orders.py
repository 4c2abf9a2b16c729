"""Monomial term orders.

Every order is turned into an integer-valued sort key on packed exponents,
so the Groebner engine compares monomials with plain ``int`` comparisons.
Graded reverse lexicographic order is encoded through prefix sums: for
variables ``x1 > ... > xn`` the key fields are ``deg, e1+..+e(n-1), ...,
e1``, all compared lexicographically with larger winning.
"""

from __future__ import annotations

import struct
from itertools import accumulate
from typing import Sequence

from .ring import ContextMismatch

LESS, EQUAL, GREATER = -1, 0, 1


class TermOrder:
    """Lex, graded reverse lex, or a block (product) order.

    ``perm`` lists variable indices from most to least significant.  A block
    order holds ``(indices, kind)`` pairs compared block by block in the
    listed sequence; inside a block the variables are ranked in the listed
    index order.
    """

    __slots__ = ("kind", "nvars", "perm", "blocks", "_parts")

    def __init__(self, kind: str, nvars: int, perm=None, blocks=None):
        if kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown term order kind {kind!r}")
        self.kind = kind
        self.nvars = nvars
        if kind == "block":
            blocks = tuple((tuple(ix), k) for ix, k in blocks)
            flat = [i for ix, _ in blocks for i in ix]
            if sorted(flat) != list(range(nvars)):
                raise ValueError("blocks must partition the variables")
            for _, k in blocks:
                if k not in ("lex", "grevlex"):
                    raise ValueError(f"unknown block kind {k!r}")
            self.blocks = blocks
            self.perm = tuple(flat)
        else:
            perm = tuple(range(nvars)) if perm is None else tuple(perm)
            if sorted(perm) != list(range(nvars)):
                raise ValueError("perm must be a permutation of the variable indices")
            self.perm = perm
            self.blocks = ((perm, kind),)
        self._parts = tuple(
            (ix, k, struct.Struct(">%d%s" % (len(ix), "H" if k == "lex" else "I")))
            for ix, k in self.blocks
        )

    # constructors -------------------------------------------------------
    @classmethod
    def lex(cls, nvars: int, perm=None) -> "TermOrder":
        return cls("lex", nvars, perm=perm)

    @classmethod
    def grevlex(cls, nvars: int, perm=None) -> "TermOrder":
        return cls("grevlex", nvars, perm=perm)

    @classmethod
    def block(cls, nvars: int, blocks) -> "TermOrder":
        return cls("block", nvars, blocks=blocks)

    @classmethod
    def elimination(cls, nvars: int, drop: Sequence[int], inner: str = "grevlex") -> "TermOrder":
        """Block order with ``drop`` in the leading block."""
        drop = sorted(set(drop))
        keep = [i for i in range(nvars) if i not in set(drop)]
        blocks = [(drop, inner)] if drop else []
        if keep:
            blocks.append((keep, inner))
        return cls("block", nvars, blocks=blocks)

    def __eq__(self, other):
        return isinstance(other, TermOrder) and self.nvars == other.nvars and self.blocks == other.blocks

    def __hash__(self):
        return hash((self.nvars, self.blocks))

    def __repr__(self):
        if self.kind == "block":
            inner = ", ".join(f"{k}{list(ix)}" for ix, k in self.blocks)
            return f"TermOrder.block({inner})"
        if self.perm == tuple(range(self.nvars)):
            return f"TermOrder.{self.kind}({self.nvars})"
        return f"TermOrder.{self.kind}({self.nvars}, perm={list(self.perm)})"

    @property
    def is_graded(self) -> bool:
        """True if total degree is the first criterion."""
        return self.kind == "grevlex" or (len(self.blocks) == 1 and self.blocks[0][1] == "grevlex")

    @property
    def is_plain_lex(self) -> bool:
        return self.kind == "lex" and self.perm == tuple(range(self.nvars))

    # keys ---------------------------------------------------------------
    def key(self, exps: Sequence[int]) -> int:
        """Sort key of an exponent vector; larger key means larger monomial."""
        if len(exps) != self.nvars:
            raise ContextMismatch("exponent vector length does not match the order")
        out = []
        for ix, k, st in self._parts:
            vals = [exps[i] for i in ix]
            if k == "grevlex" and vals:
                sums = list(accumulate(vals))
                vals = sums[::-1]
            out.append(st.pack(*vals))
        return int.from_bytes(b"".join(out), "big")

    def keycache(self, ctx) -> "KeyCache":
        return KeyCache(self, ctx)


class KeyCache(dict):
    """Memoized map from packed exponents to order keys."""

    def __init__(self, order: TermOrder, ctx):
        super().__init__()
        if order.nvars != ctx.nvars:
            raise ContextMismatch("term order does not match the context")
        self.order = order
        self.ctx = ctx
        self.identity = order.is_plain_lex
        n = order.nvars
        # single grevlex block in index order: skip the generic re-indexing
        self.plain_grevlex = order.kind == "grevlex" and order.perm == tuple(range(n))
        self._st = order._parts[0][2]

    def __missing__(self, m):
        if self.identity:
            k = m
        elif self.plain_grevlex:
            sums = list(accumulate(self.ctx.unpack(m)))
            sums.reverse()
            k = int.from_bytes(self._st.pack(*sums), "big")
        else:
            k = self.order.key(self.ctx.unpack(m))
        self[m] = k
        return k


def compare(order: TermOrder, a: Sequence[int], b: Sequence[int]) -> int:
    """Three-way comparison of exponent vectors: -1, 0 or 1."""
    if len(a) != len(b):
        raise ContextMismatch("monomials have different lengths")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)

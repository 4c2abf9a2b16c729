"""Variable contexts and the packed exponent encoding shared by all polynomials.

A monomial is an exponent vector.  Internally it is packed into one Python
integer with a fixed 16-bit field per variable, variable 0 in the most
significant field.  Each field keeps its top bit clear (a guard bit), which
makes divisibility and lcm computable with a handful of integer operations:

* multiplication is integer addition,
* ``a | b`` iff ``((b | GUARD) - a) & GUARD == GUARD``.

Exponents must therefore stay below ``2**15``.
"""

from __future__ import annotations

import re
import struct
from functools import cached_property
from typing import Iterable, Sequence

FIELD_BITS = 16
EXP_LIMIT = 1 << (FIELD_BITS - 1)
_FIELD_MASK = (1 << FIELD_BITS) - 1

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class ContextMismatch(ValueError):
    """Raised when objects from different variable contexts are combined."""


class VariableContext:
    """Ordered set of variable names partitioned into labeled blocks.

    Parameters
    ----------
    names : sequence of str
        Distinct variable names; position is the variable index.
    blocks : mapping of label to list of names, optional
        Labels are free-form, the likelihood code uses ``"p"``, ``"u"`` and
        ``"aux"``.  Variables not mentioned are put into ``"aux"``.
    order : TermOrder, optional
        The active order used for sorting and printing terms.  Defaults to
        graded reverse lexicographic in index order.
    """

    def __init__(self, names: Sequence[str], blocks=None, order=None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        for nm in names:
            if not _NAME_RE.match(nm):
                raise ValueError(f"invalid variable name {nm!r}")
        self.names = names
        self.index = {nm: i for i, nm in enumerate(names)}
        blk: dict[str, tuple[int, ...]] = {}
        seen: set[int] = set()
        for label, members in (blocks or {}).items():
            idx = tuple(self.index[m] if isinstance(m, str) else int(m) for m in members)
            if seen.intersection(idx):
                raise ValueError("a variable belongs to more than one block")
            seen.update(idx)
            blk[label] = idx
        rest = tuple(i for i in range(len(names)) if i not in seen)
        if rest:
            blk["aux"] = blk.get("aux", ()) + rest
        self.blocks = blk
        if order is None:
            from .orders import TermOrder

            order = TermOrder.grevlex(len(names))
        if order.nvars != len(names):
            raise ValueError("term order does not match the number of variables")
        self.order = order

    # identity -------------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, VariableContext) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VariableContext({list(self.names)!r})"

    def __len__(self):
        return len(self.names)

    @property
    def nvars(self) -> int:
        return len(self.names)

    def with_order(self, order) -> "VariableContext":
        return VariableContext(self.names, {k: [self.names[i] for i in v] for k, v in self.blocks.items()}, order)

    def block(self, label: str) -> tuple[int, ...]:
        return self.blocks.get(label, ())

    def extend(self, names: Iterable[str], label: str = "aux") -> "VariableContext":
        """Context with extra variables appended (least significant fields)."""
        names = tuple(names)
        blocks = {k: [self.names[i] for i in v] for k, v in self.blocks.items()}
        blocks[label] = blocks.get(label, []) + list(names)
        return VariableContext(self.names + names, blocks)

    def fresh_name(self, stem: str = "t") -> str:
        name, k = stem, 0
        while name in self.index:
            k += 1
            name = f"{stem}{k}"
        return name

    def check(self, other: "VariableContext"):
        if self != other:
            raise ContextMismatch("polynomials live in different variable contexts")

    # packing --------------------------------------------------------------
    @cached_property
    def _fmt(self) -> struct.Struct:
        return struct.Struct(">%dH" % len(self.names))

    @cached_property
    def guard(self) -> int:
        g = 0
        for _ in range(len(self.names)):
            g = (g << FIELD_BITS) | EXP_LIMIT
        return g

    @cached_property
    def ones(self) -> int:
        """Packed integer with 1 in every field (the product of all variables)."""
        g = 0
        for _ in range(len(self.names)):
            g = (g << FIELD_BITS) | 1
        return g

    def pack(self, exps: Sequence[int]) -> int:
        if len(exps) != len(self.names):
            raise ContextMismatch("exponent vector length does not match the context")
        for e in exps:
            if e < 0 or e >= EXP_LIMIT:
                raise OverflowError("exponent out of range for the packed encoding")
        if not exps:
            return 0
        return int.from_bytes(self._fmt.pack(*exps), "big")

    def unpack(self, m: int) -> tuple[int, ...]:
        if not self.names:
            return ()
        return self._fmt.unpack(m.to_bytes(2 * len(self.names), "big"))

    def var(self, i: int) -> int:
        """Packed exponent of the single variable with index ``i``."""
        return 1 << (FIELD_BITS * (len(self.names) - 1 - i))

    @cached_property
    def values(self) -> int:
        """Mask of all exponent bits (every field minus its guard bit)."""
        return self.ones * (EXP_LIMIT - 1)

    def degree_of(self, m: int) -> int:
        # base-2**16 digit sum == value mod (2**16 - 1) while the sum stays small
        return m % _FIELD_MASK

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return ((b | g) - a) & g == g

    def _ge_mask(self, a: int, b: int) -> int:
        g = self.guard
        ge = ((a | g) - b) & g
        return ge - (ge >> (FIELD_BITS - 1))

    def lcm(self, a: int, b: int) -> int:
        mask = self._ge_mask(a, b)
        return (a & mask) | (b & (self.values ^ mask))

    def gcd(self, a: int, b: int) -> int:
        mask = self._ge_mask(a, b)
        return (b & mask) | (a & (self.values ^ mask))

    def support(self, m: int) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.unpack(m)) if e)


def flat_context(n_plus_one: int, with_u: bool = True) -> VariableContext:
    """Ring with p0..pn (and u0..un) for models on n+1 states."""
    ps = [f"p{i}" for i in range(n_plus_one)]
    us = [f"u{i}" for i in range(n_plus_one)] if with_u else []
    blocks = {"p": ps}
    if with_u:
        blocks["u"] = us
    return VariableContext(ps + us, blocks)

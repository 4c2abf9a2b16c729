"""Contingency-table shapes, joint states and their polynomial variables.

Joint states are 1-based index tuples enumerated lexicographically; the
variable for state ``(1, 2, 3)`` is ``p_1_2_3`` (and ``u_1_2_3`` on the
data side).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import prod
from typing import Iterable, Sequence

from ..polyalgebra import Polynomial, PolyMatrix, VariableContext


@dataclass(frozen=True)
class Shape:
    """Format ``d_1 x ... x d_n`` of a contingency table."""

    dims: tuple[int, ...]

    def __init__(self, dims: Iterable[int]):
        dims = tuple(int(d) for d in dims)
        if not dims:
            raise ValueError("a shape needs at least one variable")
        if any(d < 2 for d in dims):
            raise ValueError(f"every dimension must be at least 2, got {dims}")
        object.__setattr__(self, "dims", dims)

    def __str__(self):
        return "x".join(map(str, self.dims))

    @property
    def n(self) -> int:
        return len(self.dims)

    @property
    def size(self) -> int:
        """Number of joint states ``D``."""
        return prod(self.dims)

    @cached_property
    def states(self) -> list[tuple[int, ...]]:
        return list(product(*(range(1, d + 1) for d in self.dims)))

    @cached_property
    def state_index(self) -> dict[tuple[int, ...], int]:
        return {s: i for i, s in enumerate(self.states)}

    def block_states(self, block: Sequence[int]) -> list[tuple[int, ...]]:
        return list(product(*(range(1, self.dims[v - 1] + 1) for v in block)))

    def name(self, state: Sequence[int], side: str = "p") -> str:
        return side + "_" + "_".join(map(str, state))

    def names(self, side: str = "p") -> list[str]:
        return [self.name(s, side) for s in self.states]

    def context(self, with_u: bool = True) -> VariableContext:
        """Ring with the p-block followed by the u-block."""
        return self._contexts[bool(with_u)]

    @cached_property
    def _contexts(self) -> dict[bool, VariableContext]:
        return {w: self._make_context(w) for w in (False, True)}

    def _make_context(self, with_u: bool) -> VariableContext:
        p = self.names("p")
        if not with_u:
            return VariableContext(p, blocks={"p": range(len(p))})
        u = self.names("u")
        D = len(p)
        return VariableContext(p + u, blocks={"p": range(D), "u": range(D, 2 * D)})

    def check_block(self, block: Iterable[int], proper: bool = True) -> tuple[int, ...]:
        b = tuple(sorted(set(int(v) for v in block)))
        if not b:
            raise ValueError("block must be nonempty")
        if b[0] < 1 or b[-1] > self.n:
            raise ValueError(f"block {b} is not a subset of 1..{self.n}")
        if proper and len(b) == self.n:
            raise ValueError("block must be a proper subset of the variables")
        return b

    def complement(self, block: Sequence[int]) -> tuple[int, ...]:
        bs = set(block)
        return tuple(v for v in range(1, self.n + 1) if v not in bs)

    def merge(self, block: Sequence[int], bstate: Sequence[int], rest: Sequence[int], rstate: Sequence[int]) -> tuple[int, ...]:
        s = [0] * self.n
        for v, x in zip(block, bstate):
            s[v - 1] = x
        for v, x in zip(rest, rstate):
            s[v - 1] = x
        return tuple(s)


@dataclass(frozen=True)
class MarginalForm:
    """Linear form summing coordinates that agree with ``block_states`` on ``block``.

    An empty block gives the total sum ``p_+`` (or ``u_+``).
    """

    block: tuple[int, ...]
    block_states: tuple[int, ...]
    side: str = "p"

    def __post_init__(self):
        if len(self.block) != len(self.block_states):
            raise ValueError("block and block_states differ in length")
        if self.side not in ("p", "u"):
            raise ValueError("side must be 'p' or 'u'")

    def label(self, shape: Shape) -> str:
        idx = ["+"] * shape.n
        for v, x in zip(self.block, self.block_states):
            idx[v - 1] = str(x)
        return self.side + "_" + "_".join(idx)

    def states(self, shape: Shape) -> list[tuple[int, ...]]:
        want = dict(zip(self.block, self.block_states))
        return [s for s in shape.states if all(s[v - 1] == x for v, x in want.items())]

    def polynomial(self, shape: Shape, ctx: VariableContext | None = None) -> Polynomial:
        ctx = ctx or shape.context()
        terms = {}
        for s in self.states(shape):
            terms[ctx.var(ctx.index[shape.name(s, self.side)])] = 1
        return Polynomial(ctx, terms)


def total_sum(shape: Shape, side: str = "p", ctx: VariableContext | None = None) -> Polynomial:
    return MarginalForm((), (), side).polynomial(shape, ctx)


def flattening(shape: Shape, block: Iterable[int], ctx: VariableContext | None = None) -> PolyMatrix:
    """Matrix with block states as rows and complement states as columns."""
    b = shape.check_block(block)
    rest = shape.complement(b)
    ctx = ctx or shape.context()
    rows, rlab = [], []
    cstates = shape.block_states(rest)
    for bs in shape.block_states(b):
        row = []
        for rs in cstates:
            row.append(Polynomial.var(ctx, shape.name(shape.merge(b, bs, rest, rs))))
        rows.append(row)
        rlab.append(MarginalForm(b, bs, "p").label(shape))
    clab = [MarginalForm(rest, rs, "p").label(shape) for rs in cstates]
    return PolyMatrix(ctx, rows, rlab, clab)


def augment_with_marginals(shape: Shape, block: Iterable[int], ctx: VariableContext | None = None) -> PolyMatrix:
    """:func:`flattening` plus a final column of u-marginals fixing the block state."""
    b = shape.check_block(block)
    ctx = ctx or shape.context()
    flat = flattening(shape, b, ctx)
    rows = []
    for bs, row in zip(shape.block_states(b), flat.rows):
        rows.append(list(row) + [MarginalForm(b, bs, "u").polynomial(shape, ctx)])
    ulabel = "u_" + "_".join("*" if v in b else "+" for v in range(1, shape.n + 1))
    return PolyMatrix(ctx, rows, flat.row_labels, list(flat.col_labels) + [ulabel])


def check_partition(shape: Shape, partition: Iterable[Iterable[int]]) -> list[tuple[int, ...]]:
    blocks = [tuple(sorted(set(int(v) for v in b))) for b in partition]
    seen: list[int] = []
    for b in blocks:
        if not b:
            raise ValueError("partition blocks must be nonempty")
        seen.extend(b)
    if sorted(seen) != list(range(1, shape.n + 1)):
        raise ValueError(f"{blocks} is not a partition of 1..{shape.n}")
    return blocks


def merge_partition(shape: Shape, partition: Iterable[Iterable[int]]):
    """Collapse each block of variables into one variable.

    Returns ``(merged_shape, bijection)`` where ``bijection`` maps original
    joint states to merged joint states.  A block's merged state is the
    1-based lexicographic rank of its sub-state.
    """
    blocks = check_partition(shape, partition)
    merged = Shape([prod(shape.dims[v - 1] for v in b) for b in blocks])
    ranks = [{s: i + 1 for i, s in enumerate(shape.block_states(b))} for b in blocks]
    bij = {}
    for s in shape.states:
        bij[s] = tuple(r[tuple(s[v - 1] for v in b)] for b, r in zip(blocks, ranks))
    return merged, bij


def merge_renaming(shape: Shape, partition) -> dict[str, str]:
    """Variable names of the merged shape mapped to the original names."""
    merged, bij = merge_partition(shape, partition)
    out = {}
    for s, t in bij.items():
        for side in ("p", "u"):
            out[merged.name(t, side)] = shape.name(s, side)
    return out

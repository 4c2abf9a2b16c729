"""Hilbert series of monomial ideals.

The numerator ``K(t)`` of ``HS(S/I) = K(t) / (1-t)^N`` is computed by the
pivot recursion ``K(I) = K(I + <x>) + t * K(I : x)`` until the generators
have pairwise disjoint supports, where ``K = prod(1 - t^deg)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from ..polyalgebra import Polynomial


@dataclass(frozen=True)
class HilbertData:
    projective_dimension: int
    degree: int
    numerator: tuple[int, ...]  # coefficients of K(t), constant term first
    nvars: int

    @property
    def krull_dimension(self) -> int:
        return self.projective_dimension + 1

    @property
    def codimension(self) -> int:
        return self.nvars - self.krull_dimension


def _minimal(gens: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    gens = sorted(set(gens), key=lambda e: (sum(e), e))
    out: list[tuple[int, ...]] = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _numerator(gens: list[tuple[int, ...]]) -> list[int]:
    if not gens:
        return [1]
    if any(sum(g) == 0 for g in gens):
        return [0]
    nv = len(gens[0])
    counts = [0] * nv
    for g in gens:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    x = max(range(nv), key=lambda i: (counts[i], -i))
    if counts[x] <= 1:
        out = [1]
        for g in gens:
            f = [0] * (sum(g) + 1)
            f[0] = 1
            f[-1] -= 1
            out = _poly_mul(out, f)
        return out
    # I + <x>
    unit = tuple(1 if i == x else 0 for i in range(nv))
    plus = [g for g in gens if g[x] == 0] + [unit]
    # I : x
    colon = [tuple(e - 1 if i == x and e else e for i, e in enumerate(g)) for g in gens]
    a = _numerator(_minimal(plus))
    b = _numerator(_minimal(colon))
    return _poly_add(a, [0] + b)


def hilbert_numerator(gens: Sequence[Sequence[int]]) -> list[int]:
    out = _numerator(_minimal([tuple(g) for g in gens]))
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _from_numerator(num: list[int], nvars: int) -> HilbertData:
    if not any(num):
        return HilbertData(-1, 0, tuple(num), nvars)
    h = list(num)
    cancelled = 0
    while sum(h) == 0:
        # divide by (1 - t): cumulative sums
        q, acc = [], 0
        for c in h[:-1]:
            acc += c
            q.append(acc)
        h = q
        cancelled += 1
    krull = nvars - cancelled
    return HilbertData(krull - 1, sum(h), tuple(num), nvars)


def hilbert(ideal) -> HilbertData:
    """Dimension and degree of a monomial ideal.

    Accepts an :class:`~likgeo.groebner.Ideal` (or list of polynomials)
    whose generators are all monomials; pass the initial ideal of a Groebner
    basis to get the data of an arbitrary homogeneous ideal.
    """
    gens = list(ideal.generators) if hasattr(ideal, "generators") else list(ideal)
    ctx = ideal.ctx if hasattr(ideal, "ctx") else (gens[0].ctx if gens else None)
    if ctx is None:
        raise ValueError("cannot determine the number of variables")
    exps = []
    for g in gens:
        if not isinstance(g, Polynomial):
            raise TypeError("generators must be polynomials")
        if g.is_zero():
            continue
        if not g.is_monomial():
            raise ValueError(f"non-monomial generator {g}")
        exps.append(g.terms()[0][1])
    return _from_numerator(hilbert_numerator(exps) if exps else [1], ctx.nvars)


def vertex_cover_codim(gens: Sequence[Sequence[int]], nvars: int) -> int:
    """Smallest number of variables meeting the support of every generator.

    Exhaustive; this is the codimension of the monomial ideal.
    """
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in gens]
    if any(not s for s in supports):
        return nvars + 1  # unit ideal, empty variety
    if not supports:
        return 0
    for size in range(nvars + 1):
        for cover in combinations(range(nvars), size):
            cs = set(cover)
            if all(s & cs for s in supports):
                return size
    return nvars

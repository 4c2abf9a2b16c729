from itertools import product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from likgeo.groebner import Ideal, hilbert
from likgeo.polyalgebra import Polynomial, TermOrder, VariableContext
from likgeo.statmodels import Shape, segre_ideal


def monomials(ctx, *exps):
    return [Polynomial.from_terms(ctx, [(1, e)]) for e in exps]


def test_two_points():
    ctx = VariableContext(["x", "y"])
    h = hilbert(Ideal(ctx, monomials(ctx, (1, 1))))
    assert (h.projective_dimension, h.degree) == (0, 2)


def test_zero_and_unit():
    ctx = VariableContext(["x", "y", "z"])
    h = hilbert(Ideal(ctx, []))
    assert (h.projective_dimension, h.degree) == (2, 1)
    h = hilbert(Ideal(ctx, [Polynomial.const(ctx, 1)]))
    assert h.projective_dimension == -1


def test_rejects_non_monomial():
    ctx = VariableContext(["x", "y"])
    with pytest.raises(ValueError):
        hilbert(Ideal(ctx, [Polynomial.parse(ctx, "x - y")]))


def test_segre_2x2_initial_ideal():
    I = segre_ideal(Shape([2, 2]))
    h = hilbert(I.initial_ideal(TermOrder.grevlex(I.ctx.nvars)))
    assert (h.projective_dimension, h.degree) == (2, 2)


def _standard_count(gens, n, d):
    # brute force: monomials of degree d not divisible by any generator
    count = 0
    for e in product(range(d + 1), repeat=n):
        if sum(e) != d:
            continue
        if not any(all(a >= b for a, b in zip(e, g)) for g in gens):
            count += 1
    return count


def _series(num, n, d):
    # coefficient of t^d in num(t) / (1-t)^n
    return sum(c * comb(d - i + n - 1, n - 1) for i, c in enumerate(num) if i <= d)


@settings(max_examples=40, deadline=None, derandomize=True)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.lists(st.integers(0, 2), min_size=n, max_size=n).map(tuple), min_size=1, max_size=5))))
def test_numerator_matches_brute_force_hilbert_function(data):
    n, gens = data
    gens = [g for g in gens if any(g)] or [tuple([1] + [0] * (n - 1))]
    ctx = VariableContext([f"v{i}" for i in range(n)])
    h = hilbert(Ideal(ctx, monomials(ctx, *gens)))
    for d in range(7):
        assert _series(h.numerator, n, d) == _standard_count(gens, n, d)

"""Hypothesis suites: term orders, Groebner bases, saturation, elimination, Hilbert data."""

from itertools import combinations

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from likgeo.groebner import (
    Ideal,
    buchberger,
    eliminate,
    hilbert,
    ideal_equals,
    normal_form,
    saturate,
    vertex_cover_codim,
)
from likgeo.polyalgebra import EQUAL, GREATER, LESS, Polynomial, TermOrder, VariableContext, compare

SETTINGS = settings(max_examples=60, deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow])

NAMES = ["x", "y", "z"]
CTX = VariableContext(NAMES)


def orders(n):
    return st.sampled_from(
        [
            TermOrder.lex(n),
            TermOrder.grevlex(n),
            TermOrder.lex(n, list(reversed(range(n)))),
            TermOrder.grevlex(n, list(reversed(range(n)))),
        ]
        + ([TermOrder.block(n, [([0], "lex"), (list(range(1, n)), "grevlex")])] if n > 1 else [])
    )


def exponents(n, top=4):
    return st.lists(st.integers(0, top), min_size=n, max_size=n).map(tuple)


@SETTINGS
@given(orders(3), exponents(3), exponents(3), exponents(3))
def test_term_order_axioms(order, a, b, c):
    ab = compare(order, a, b)
    # antisymmetry and totality
    assert ab == -compare(order, b, a)
    assert (ab == EQUAL) == (a == b)
    # multiplicativity
    shift = lambda e: tuple(i + j for i, j in zip(e, c))
    assert compare(order, shift(a), shift(b)) == ab
    # 1 is the smallest monomial
    assert compare(order, (0, 0, 0), a) in (LESS, EQUAL)
    # transitivity
    if ab == LESS and compare(order, b, c) == LESS:
        assert compare(order, a, c) == LESS


@SETTINGS
@given(orders(3), exponents(3), exponents(3))
def test_key_is_consistent_with_compare(order, a, b):
    ka, kb = order.key(a), order.key(b)
    expected = compare(order, a, b)
    got = EQUAL if ka == kb else (GREATER if ka > kb else LESS)
    assert got == expected


def terms(n, maxdeg=2):
    return st.lists(st.tuples(st.integers(-3, 3).filter(bool), exponents(n, maxdeg)), min_size=1, max_size=3)


def polynomial(ctx, maxdeg=2):
    return terms(ctx.nvars, maxdeg).map(lambda ts: Polynomial.from_terms(ctx, ts)).filter(lambda p: not p.is_zero())


gen_sets = st.lists(polynomial(CTX), min_size=1, max_size=3)


@SETTINGS
@given(gen_sets, orders(3))
def test_gb_idempotent(gens, order):
    gb = buchberger(gens, order)
    again = buchberger(gb, order)
    assert {g.monic(order) for g in gb} == {g.monic(order) for g in again}


@SETTINGS
@given(gen_sets, st.lists(polynomial(CTX, 1), min_size=3, max_size=3))
def test_membership_soundness(gens, multipliers):
    order = TermOrder.grevlex(3)
    I = Ideal(CTX, gens)
    gb = I.gb(order)
    f = Polynomial.zero(CTX)
    for g, m in zip(gens, multipliers):
        f = f + g * m
    assert normal_form(f, gb, order).is_zero()
    one = Polynomial.const(CTX, 1)
    assert normal_form(one, gb, order).is_zero() == I.is_unit()


@SETTINGS
@given(gen_sets, polynomial(CTX, 1))
def test_saturation_laws(gens, f):
    I = Ideal(CTX, gens)
    sat = saturate(I, f)
    assert ideal_equals(saturate(sat, f), sat)
    assert all(sat.contains(g) for g in I.generators)
    assert ideal_equals(saturate(I, Polynomial.const(CTX, 5)), I)


@SETTINGS
@given(gen_sets, polynomial(CTX, 1))
def test_saturation_routes_agree(gens, f):
    I = Ideal(CTX, gens)
    a = saturate(I, f, method="rabinowitsch")
    b = saturate(I, f, method="auto")
    assert ideal_equals(a, b)


@SETTINGS
@given(gen_sets, st.sampled_from([["x"], ["z"], ["x", "y"]]))
def test_elimination_soundness(gens, drop):
    I = Ideal(CTX, gens)
    out = eliminate(I, drop)
    for g in out.generators:
        lifted = g.to_context(CTX)
        assert not ({CTX.names[i] for i in lifted.variables()} & set(drop))
        assert I.contains(lifted)


@SETTINGS
@given(gen_sets, gen_sets, gen_sets)
def test_ideal_equals_equivalence(a, b, c):
    A, B, C = Ideal(CTX, a), Ideal(CTX, b), Ideal(CTX, c)
    assert ideal_equals(A, Ideal(CTX, list(reversed(a))))
    assert ideal_equals(A, B) == ideal_equals(B, A)
    AB = Ideal(CTX, a + b)
    if ideal_equals(A, AB) and ideal_equals(AB, Ideal(CTX, b + a)):
        assert ideal_equals(A, Ideal(CTX, b + a))


def _cover_dim(gens, n):
    # brute force: smallest variable set meeting every generator's support
    supports = [g.variables() for g in gens]
    for k in range(n + 1):
        for s in combinations(range(n), k):
            if all(set(s) & sup for sup in supports):
                return n - k
    return -1


@st.composite
def monomial_ideals(draw):
    n = draw(st.integers(1, 12))
    ctx = VariableContext([f"v{i}" for i in range(n)])
    k = draw(st.integers(1, 10))
    gens = []
    for _ in range(k):
        e = draw(st.lists(st.integers(0, 2), min_size=n, max_size=n))
        if not any(e):
            e[draw(st.integers(0, n - 1))] = 1
        gens.append(Polynomial.from_terms(ctx, [(1, tuple(e))]))
    return ctx, gens


@SETTINGS
@given(monomial_ideals())
def test_hilbert_dimension_matches_vertex_cover(data):
    ctx, gens = data
    n = ctx.nvars
    h = hilbert(Ideal(ctx, gens))
    assert h.krull_dimension == _cover_dim(gens, n)
    assert h.codimension == vertex_cover_codim([g.terms()[0][1] for g in gens], n)

import pytest
import sympy

from likgeo.groebner import (
    Ideal,
    buchberger,
    eliminate,
    groebner_basis,
    ideal_equals,
    interreduce,
    intersect,
    is_groebner,
    minimalize,
    normal_form,
    reduces_to_zero,
    saturate,
)
from likgeo.polyalgebra import Polynomial, TermOrder, VariableContext

from conftest import polys


def to_sympy(f, syms):
    return sympy.sympify(str(f).replace("^", "**"), locals=syms)


def sympy_gb(gens, names, order):
    syms = {n: sympy.Symbol(n) for n in names}
    G = sympy.groebner([to_sympy(g, syms) for g in gens], *[syms[n] for n in names], order=order)
    return {sympy.Poly(g, *[syms[n] for n in names]).monic().as_expr() for g in G.exprs}, syms


def assert_matches_sympy(gens, names, order_name):
    ctx = gens[0].ctx
    order = TermOrder.lex(len(names)) if order_name == "lex" else TermOrder.grevlex(len(names))
    ours = groebner_basis(gens, order, ctx)
    expected, syms = sympy_gb(gens, names, order_name)
    gens_s = [syms[n] for n in names]
    got = {sympy.Poly(to_sympy(g, syms), *gens_s).monic().as_expr() for g in ours}
    assert got == expected


def test_buchberger_small_lex():
    ctx = VariableContext(["x", "y"])
    gb = buchberger(Ideal(ctx, polys(ctx, "x^2 - 1", "x*y - 1")), TermOrder.lex(2))
    assert set(gb) == set(polys(ctx, "y^2 - 1", "x - y"))


def test_buchberger_monomial_ideal_unchanged():
    ctx = VariableContext(["x", "y"])
    gb = buchberger(Ideal(ctx, polys(ctx, "x^2", "x*y")), TermOrder.lex(2))
    assert set(gb) == set(polys(ctx, "x^2", "x*y"))


def test_gb_sorted_by_leading_monomial():
    ctx = VariableContext(["x", "y", "z"])
    order = TermOrder.grevlex(3)
    gb = groebner_basis(polys(ctx, "x^2 - y*z", "y^2 - x*z", "z^2 - x*y"), order, ctx)
    keys = [order.key(g.leading_term(order)[1]) for g in gb]
    assert keys == sorted(keys)


CORPUS = [
    (["x", "y", "z"], ["x^2 + y*z - 2", "x*y*z - 1", "x - y + z^2"]),
    (["x", "y", "z"], ["x^3 - y*z", "y^2 - x*z", "z^2 - x*y"]),
    (["a", "b", "c", "d"], ["a*d - b*c", "a*c - b^2", "b*d - c^2"]),
    (["x", "y"], ["3*x^2*y + 2*x*y + y + 9*x^2 + 5*x - 3", "2*x^3*y - x*y - y + 6*x^3 - 2*x^2 - 3*x + 3", "x^3*y + x^2*y + 3*x^3 + 2*x^2"]),
    (["t", "x", "y"], ["x - t^2", "y - t^3"]),
]


@pytest.mark.parametrize("names,texts", CORPUS)
@pytest.mark.parametrize("order_name", ["lex", "grevlex"])
def test_against_sympy(names, texts, order_name):
    ctx = VariableContext(names)
    assert_matches_sympy(polys(ctx, *texts), names, order_name)


def test_normal_form_examples():
    ctx = VariableContext(["x", "y"])
    lex = TermOrder.lex(2)
    (g,) = polys(ctx, "x*y - 1")
    assert normal_form(g, [g], lex).is_zero()
    assert normal_form(polys(ctx, "y")[0], polys(ctx, "x + y", "x"), lex) == polys(ctx, "y")[0]
    assert normal_form(polys(ctx, "x^2*y - 1")[0], [g], lex) == polys(ctx, "x - 1")[0]


def test_normal_form_remainder_is_reduced():
    ctx = VariableContext(["x", "y", "z"])
    order = TermOrder.grevlex(3)
    divs = polys(ctx, "x*y - z", "y^2 - x")
    f = polys(ctx, "x^3*y^2 + 5*x*y*z - y^3 + z")[0]
    r = normal_form(f, divs, order)
    lms = [d.leading_term(order)[1] for d in divs]
    for _, e in r.terms():
        assert not any(all(a >= b for a, b in zip(e, lm)) for lm in lms)
    assert Ideal(ctx, divs).contains(f - r)


def test_is_groebner_examples():
    ctx = VariableContext(["x", "y"])
    lex = TermOrder.lex(2)
    assert is_groebner(polys(ctx, "x"), lex)
    check = is_groebner(polys(ctx, "x + y", "x"), lex)
    assert not check
    assert check.remainder == polys(ctx, "y")[0]


def test_eliminate_examples():
    ctx = VariableContext(["t", "x", "y"])
    out = eliminate(Ideal(ctx, polys(ctx, "t*x - 1", "x - y")), ["t"])
    assert out.ctx.names == ("x", "y")
    assert ideal_equals(out, Ideal(out.ctx, polys(out.ctx, "x - y")))
    out = eliminate(Ideal(ctx, polys(ctx, "x - t", "y - t^2")), ["t"])
    assert ideal_equals(out, Ideal(out.ctx, polys(out.ctx, "y - x^2")))
    ctx2 = VariableContext(["x", "y"])
    out = eliminate(Ideal(ctx2, polys(ctx2, "x")), ["y"])
    assert [str(g) for g in out.generators] == ["x"]


@pytest.mark.parametrize("method", ["rabinowitsch", "revlex", "auto"])
def test_saturate_examples(method):
    ctx = VariableContext(["x", "y"])
    x, y = polys(ctx, "x", "y")
    sat = saturate(Ideal(ctx, polys(ctx, "x^2*y")), x, method=method)
    assert ideal_equals(sat, Ideal(ctx, [y]))
    sat = saturate(Ideal(ctx, [x]), y, method=method)
    assert ideal_equals(sat, Ideal(ctx, [x]))


def test_saturate_by_product_sequential():
    ctx = VariableContext(["x", "y", "z"])
    I = Ideal(ctx, polys(ctx, "x*y*z^2", "x^2*y*z"))
    x, y = polys(ctx, "x", "y")
    assert ideal_equals(saturate(I, [x, y]), saturate(I, x * y, method="rabinowitsch"))
    assert saturate(I, [x, y]).is_unit() is False


def test_intersect():
    ctx = VariableContext(["x", "y"])
    out = intersect(Ideal(ctx, polys(ctx, "x")), Ideal(ctx, polys(ctx, "y")))
    assert ideal_equals(out, Ideal(ctx, polys(ctx, "x*y")))


def test_ideal_equals_examples():
    ctx = VariableContext(["x", "y"])
    a = Ideal(ctx, polys(ctx, "x^2 - y", "x*y"))
    b = Ideal(ctx, polys(ctx, "x*y", "x^2 - y"))
    assert ideal_equals(a, b)
    assert ideal_equals(Ideal(ctx, polys(ctx, "x")), Ideal(ctx, polys(ctx, "x", "x^2")))
    assert not ideal_equals(Ideal(ctx, polys(ctx, "x")), Ideal(ctx, polys(ctx, "y")))


def test_zero_and_unit_ideals():
    ctx = VariableContext(["x", "y"])
    zero = Ideal(ctx, [Polynomial.zero(ctx)])
    assert zero.is_zero() and zero.generators == []
    unit = Ideal(ctx, polys(ctx, "x", "x + 1"))
    assert unit.is_unit()
    assert unit.gb() == [Polynomial.const(ctx, 1)]


def test_minimalize_examples():
    ctx = VariableContext(["x", "y"])
    assert minimalize(polys(ctx, "x", "x^2", "y")) == polys(ctx, "x", "y")
    assert len(minimalize(polys(ctx, "x + y", "x - y", "x"))) == 2
    with pytest.raises(ValueError):
        minimalize(polys(ctx, "x + 1"))


def test_reduces_to_zero_agrees_with_normal_form():
    ctx = VariableContext(["x", "y", "z"])
    order = TermOrder.grevlex(3)
    gb = groebner_basis(polys(ctx, "x^2 - y*z", "y^3 - x*z"), order, ctx)
    for t in ["x^3*y - x*y^2*z", "x^2*y^3 - x*y*z*x", "x + y", "z^5"]:
        f = polys(ctx, t)[0]
        assert reduces_to_zero(f, gb, order) == normal_form(f, gb, order).is_zero()


def test_interreduce_matches_buchberger():
    ctx = VariableContext(["x", "y", "z"])
    order = TermOrder.lex(3)
    gb = groebner_basis(polys(ctx, "x^2 - y", "x*y - z"), order, ctx)
    noisy = gb + [gb[0] * polys(ctx, "x")[0], gb[-1] + gb[0]]
    assert interreduce(noisy, order) == gb

from fractions import Fraction

import pytest

from likgeo.polyalgebra import (
    EQUAL,
    GREATER,
    LESS,
    Polynomial,
    PolyMatrix,
    PolynomialSyntaxError,
    TermOrder,
    VariableContext,
    arith,
    compare,
    determinant,
    flat_context,
    minors,
    nonzero_minors,
    substitute,
)
from likgeo.statmodels import Shape


def test_compare_lex_and_grevlex():
    assert compare(TermOrder.lex(2), (1, 0), (0, 1)) == GREATER
    assert compare(TermOrder.grevlex(3), (1, 1, 0), (0, 0, 2)) == GREATER
    assert compare(TermOrder.grevlex(3), (0, 0, 2), (1, 1, 0)) == LESS
    assert compare(TermOrder.lex(3), (1, 2, 3), (1, 2, 3)) == EQUAL


def test_block_order_p_before_u():
    shape = Shape([2, 3, 4])
    ctx = shape.context()
    D = shape.size
    order = TermOrder.block(2 * D, [(list(range(D)), "lex"), (list(range(D, 2 * D)), "lex")])
    p234 = [0] * (2 * D)
    p234[ctx.index["p_2_3_4"]] = 1
    pure_u = [0] * D + [3] * D
    assert compare(order, p234, pure_u) == GREATER


def test_arith(xyz):
    ctx, (x, y, z) = xyz
    assert arith(x + y, -y, "add") == x
    assert arith(x - y, x + y, "mul") == x * x - y * y
    with pytest.raises(ValueError):
        arith(x, y, "div")


def test_multiply_by_one_is_identity():
    ctx = Shape([2, 2]).context()
    f = Polynomial.parse(ctx, "p_1_1*p_2_2 - p_1_2*p_2_1")
    assert f * Polynomial.const(ctx, 1) == f


def test_parse_roundtrip(xyz):
    ctx, _ = xyz
    f = Polynomial.parse(ctx, "3/2*x^2*y - (y - z)**2 + 7")
    assert Polynomial.parse(ctx, str(f)) == f


@pytest.mark.parametrize("bad", ["x +", "x ^ y", "2 ** x", "x $ y", "(x"])
def test_parse_errors(xyz, bad):
    ctx, _ = xyz
    with pytest.raises((PolynomialSyntaxError, ValueError)):
        Polynomial.parse(ctx, bad)


def test_unknown_variable(xyz):
    ctx, _ = xyz
    with pytest.raises((KeyError, ValueError)):
        Polynomial.parse(ctx, "x + w")


def test_minors_2x2(xyz):
    ctx, (x, y, z) = xyz
    m = PolyMatrix(ctx, [[x, y], [z, x]])
    assert minors(m, 2) == [x * x - y * z]


def test_minor_enumeration_order():
    ctx = VariableContext([f"a{i}" for i in range(9)])
    a = [Polynomial.var(ctx, i) for i in range(9)]
    m = PolyMatrix(ctx, [a[0:3], a[3:6], a[6:9]])
    ms = minors(m, 2)
    assert len(ms) == 9
    # rows {0,1}, cols {0,1} first; rows {1,2}, cols {1,2} last
    assert ms[0] == a[0] * a[4] - a[1] * a[3]
    assert ms[-1] == a[4] * a[8] - a[5] * a[7]


def test_diagonal_ideal_minors():
    n = 4
    ctx = flat_context(n)
    u = [Polynomial.var(ctx, f"u{i}") for i in range(n)]
    p = [Polynomial.var(ctx, f"p{i}") for i in range(n)]
    ms = nonzero_minors(PolyMatrix(ctx, [u, p]), 2)
    assert len(ms) == n * (n - 1) // 2


def _laplace(rows):
    # independent determinant oracle: first-row cofactor expansion
    if len(rows) == 1:
        return rows[0][0]
    total = None
    for j, a in enumerate(rows[0]):
        sub = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = a * _laplace(sub)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_determinant_matches_laplace(n):
    names = [f"a{i}_{j}" for i in range(n) for j in range(n)]
    ctx = VariableContext(names)
    rows = [[Polynomial.var(ctx, f"a{i}_{j}") for j in range(n)] for i in range(n)]
    assert determinant(rows) == _laplace(rows)


def test_determinant_with_zero_pivot():
    ctx = VariableContext(["x", "y"])
    x, y = Polynomial.var(ctx, "x"), Polynomial.var(ctx, "y")
    zero, one = Polynomial.zero(ctx), Polynomial.const(ctx, 1)
    rows = [[zero, x, one, zero], [y, zero, zero, one], [one, zero, x, zero], [zero, one, zero, y]]
    assert determinant(rows) == _laplace(rows)


def test_substitute_constant():
    ctx = VariableContext(["x", "y"])
    f = Polynomial.parse(ctx, "x^2 - y")
    assert substitute(f, {"x": 2}) == Polynomial.parse(ctx, "4 - y")


def test_substitute_independence_mle_vanishes():
    shape = Shape([2, 2])
    ctx = shape.context()
    f = Polynomial.parse(ctx, "p_1_1*p_2_2 - p_1_2*p_2_1")
    m = {
        "p_1_1": "(u_1_1+u_1_2)*(u_1_1+u_2_1)",
        "p_1_2": "(u_1_1+u_1_2)*(u_1_2+u_2_2)",
        "p_2_1": "(u_2_1+u_2_2)*(u_1_1+u_2_1)",
        "p_2_2": "(u_2_1+u_2_2)*(u_1_2+u_2_2)",
    }
    assert f.substitute({k: Polynomial.parse(ctx, v) for k, v in m.items()}).is_zero()


def test_substitute_hardy_weinberg_mle_point():
    # theta = (u1 + 2 u2) / (2 u+) = 3/8 at u = (2, 1, 1)
    ctx = flat_context(3)
    gens = [
        Polynomial.parse(ctx, "4*p2*u0 - p1*u1 + 2*p2*u1 - 2*p1*u2"),
        Polynomial.parse(ctx, "2*p1*u0 - 2*p0*u1 + p1*u1 - 4*p0*u2"),
    ]
    point = {"u0": 2, "u1": 1, "u2": 1, "p0": Fraction(25, 64), "p1": Fraction(30, 64), "p2": Fraction(9, 64)}
    for g in gens:
        assert g.substitute(point).is_zero()


def test_homogeneity_and_degrees(xyz):
    ctx, (x, y, z) = xyz
    assert (x * y - z * z).is_homogeneous()
    assert not (x * y - z).is_homogeneous()
    assert (x * x * y).total_degree() == 3


def test_context_mismatch():
    a = VariableContext(["x", "y"])
    b = VariableContext(["y", "x"])
    with pytest.raises(ValueError):
        Polynomial.var(a, "x") + Polynomial.var(b, "x")

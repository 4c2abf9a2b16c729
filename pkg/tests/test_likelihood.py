from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from likgeo.groebner import Ideal, ideal_equals, is_groebner
from likgeo.likelihood import (
    LikelihoodProblem,
    MLDegreeError,
    augmented_jacobian,
    dimension_check,
    hardy_weinberg_mle,
    independence_likelihood,
    independence_parametrization,
    joint_independence_likelihood,
    lagrange_likelihood,
    merged_route,
    ml_degree,
    toric_likelihood,
)
from likgeo.polyalgebra import Polynomial, PolyMatrix, flat_context, nonzero_minors
from likgeo.statmodels import Shape, ToricMatrix, loglinear_matrix, segre_ideal

HW_PRINTED = [
    "4*p0*p2 - p1^2",
    "4*p2*u0 - p1*u1 + 2*p2*u1 - 2*p1*u2",
    "2*p1*u0 - 2*p0*u1 + p1*u1 - 4*p0*u2",
]


@pytest.fixture(scope="module")
def hw():
    prob = LikelihoodProblem.flat(3, ["4*p0*p2 - p1^2"])
    lag = lagrange_likelihood(prob)
    tor = toric_likelihood(ToricMatrix([[0, 1, 2], [2, 1, 0]]), model=prob.model)
    printed = Ideal(prob.ctx, [Polynomial.parse(prob.ctx, t) for t in HW_PRINTED])
    return prob, lag, tor, printed


def test_problem_validation():
    ctx = flat_context(2)
    with pytest.raises(ValueError):
        LikelihoodProblem(ctx, Ideal(ctx, [Polynomial.parse(ctx, "p0*u1")]))
    with pytest.raises(ValueError):
        LikelihoodProblem(ctx, Ideal(ctx, [Polynomial.parse(ctx, "p0^2 - p1")]))


@pytest.mark.parametrize("gens", [["p0", "p1"], ["p0^2", "p0*p1 + p1^2", "p1^3"]])
def test_empty_model_rejected(gens):
    prob = LikelihoodProblem.flat(2, gens)
    with pytest.raises(ValueError):
        lagrange_likelihood(prob)


def test_augmented_jacobian_shape_and_rows():
    prob = LikelihoodProblem.flat(3, ["4*p0*p2 - p1^2"])
    J = augmented_jacobian(prob)
    assert J.shape == (3, 3)
    ctx = prob.ctx
    assert J.rows[2] == [Polynomial.parse(ctx, t) for t in ["4*p0*p2", "-2*p1^2", "4*p0*p2"]]
    assert len(nonzero_minors(J, 2)) == 9


def test_projective_space_gives_diagonal_minors():
    prob = LikelihoodProblem.flat(3)
    L = lagrange_likelihood(prob)
    ctx = prob.ctx
    diag = nonzero_minors(PolyMatrix(ctx, [prob.u, prob.p]), 2)
    assert ideal_equals(L, Ideal(ctx, diag))
    assert dimension_check(L) == 2


def test_hardy_weinberg_constructions_agree(hw):
    prob, lag, tor, printed = hw
    assert ideal_equals(lag, printed)
    assert ideal_equals(tor, printed)


def test_hardy_weinberg_literal_minor_size_differs():
    prob = LikelihoodProblem.flat(3, ["4*p0*p2 - p1^2"])
    lit = lagrange_likelihood(prob, minor_size="literal")
    assert lit.info["minor_size"] == 2
    assert lagrange_likelihood(prob).info["minor_size"] == 3


@settings(max_examples=25, deadline=None, derandomize=True)
@given(st.lists(st.integers(1, 50), min_size=3, max_size=3))
def test_birch_consistency_on_hardy_weinberg(hw, u):
    _, lag, tor, _ = hw
    p = hardy_weinberg_mle(u)
    # the toric model is the rescaled curve 4 p0 p2 = p1^2
    point = {"u0": u[0], "u1": u[1], "u2": u[2], "p0": p[0], "p1": p[1], "p2": p[2]}
    for L in (lag, tor):
        for g in L.generators:
            assert g.substitute(point).is_zero()


def test_hardy_weinberg_mle_value():
    assert hardy_weinberg_mle([2, 1, 1]) == [Fraction(25, 64), Fraction(30, 64), Fraction(9, 64)]


def test_toric_saturation_monotone(hw):
    _, _, tor, _ = hw
    pre = tor.info["pre_saturation"]
    assert all(tor.contains(g) for g in pre.generators)


def test_pplus_saturation_same_on_hardy_weinberg(hw):
    prob, _, tor, _ = hw
    fast = toric_likelihood(ToricMatrix([[0, 1, 2], [2, 1, 0]]), model=prob.model, saturation="pplus")
    assert ideal_equals(fast, tor)


@pytest.mark.parametrize("dims", [[2, 2], [2, 3]])
def test_independence_cross_constructions(dims):
    s = Shape(dims)
    L, order = independence_likelihood(s)
    tor = toric_likelihood(loglinear_matrix(s, [[1], [2]]))
    lag = lagrange_likelihood(LikelihoodProblem.from_shape(s, segre_ideal(s)))
    assert ideal_equals(L, tor)
    assert ideal_equals(L, lag)
    assert dimension_check(L) == s.size - 1
    assert dimension_check(tor) == s.size - 1


@pytest.mark.parametrize("dims", [[2, 2], [2, 3], [3, 3], [2, 2, 2]])
def test_independence_is_groebner(dims):
    L, order = independence_likelihood(Shape(dims))
    assert is_groebner(L.generators, order)


@pytest.mark.parametrize("dims", [[2, 2], [3, 2], [2, 2, 2], [2, 3, 2]])
def test_parametrization_vanishes(dims):
    s = Shape(dims)
    L, _ = independence_likelihood(s)
    sub = independence_parametrization(s, L.ctx)
    for g in L.generators:
        assert g.substitute(sub).is_zero()


def test_independence_requires_two_variables():
    with pytest.raises(ValueError):
        independence_likelihood(Shape([4]))


def test_joint_independence_singletons_match_complete():
    s = Shape([2, 2, 2])
    J, _ = joint_independence_likelihood(s, [[1], [2], [3]])
    L, _ = independence_likelihood(s)
    assert ideal_equals(J, L)


def test_joint_independence_routes():
    s = Shape([2, 2, 3])
    J, order = joint_independence_likelihood(s, [[1], [2, 3]])
    assert J.info["merged_route_agrees"]
    assert ideal_equals(J, merged_route(s, [[1], [2, 3]]))
    assert is_groebner(J.generators, order)


def test_joint_independence_single_block_rejected():
    with pytest.raises(ValueError):
        joint_independence_likelihood(Shape([2, 2]), [[1, 2]])


def test_ml_degree_small_models(hw):
    _, lag, _, _ = hw
    assert ml_degree(lag)[0] == 1
    L, _ = independence_likelihood(Shape([2, 3]))
    count, diag = ml_degree(L, seed=5)
    assert count == 1
    assert len(diag["runs"]) == 2


def test_ml_degree_reproducible(hw):
    _, lag, _, _ = hw
    assert ml_degree(lag, seed=3)[1] == ml_degree(lag, seed=3)[1]


def test_ml_degree_rejects_non_likelihood_ideal():
    ctx = flat_context(3)
    # only the model: fibers are curves, not finite sets
    with pytest.raises(MLDegreeError):
        ml_degree(Ideal(ctx, [Polynomial.parse(ctx, "p0*p2 - p1^2")]))


def test_singular_locus_option():
    prob = LikelihoodProblem.flat(3, ["p0*p2 - p1^2"])
    plain = lagrange_likelihood(prob)
    sing = Ideal(prob.ctx, [Polynomial.parse(prob.ctx, t) for t in ["p0", "p1", "p2"]])
    prob2 = LikelihoodProblem.flat(3, ["p0*p2 - p1^2"], singular_locus=sing)
    assert ideal_equals(lagrange_likelihood(prob2), plain)

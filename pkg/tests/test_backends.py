import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from likgeo.groebner import Ideal, groebner_basis, kernel
from likgeo.groebner import _kernel_py as py
from likgeo.groebner.engine import to_engine
from likgeo.polyalgebra import Polynomial, TermOrder, VariableContext
from likgeo.statmodels import Shape, loglinear_matrix

compiled = kernel.compiled_kernel
needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernel not built")

CTX = VariableContext(["x", "y", "z", "w"])


@pytest.fixture
def restore_backend():
    before = kernel.BACKEND
    yield
    kernel.use(before)


def test_default_backend_is_reported():
    assert kernel.BACKEND in ("python", "cython")
    if compiled is not None:
        assert kernel.BACKEND == "cython"


def test_pure_python_switch():
    env = dict(os.environ, LIKGEO_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from likgeo.groebner import BACKEND; print(BACKEND)"], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "python"


def test_unknown_backend(restore_backend):
    with pytest.raises(ValueError):
        kernel.use("fortran")


poly = st.lists(
    st.tuples(st.integers(-9, 9).filter(bool), st.lists(st.integers(0, 3), min_size=4, max_size=4).map(tuple)),
    min_size=1,
    max_size=4,
).map(lambda ts: Polynomial.from_terms(CTX, ts)).filter(lambda p: not p.is_zero())


@needs_compiled
@settings(max_examples=80, deadline=None, derandomize=True)
@given(poly, st.lists(poly, min_size=1, max_size=3))
def test_reduce_poly_kernels_agree(f, divisors):
    order = TermOrder.grevlex(4)
    key = order.keycache(CTX)
    polys = [to_engine(g) for g in divisors]
    lms = [py.leading(d, key) for d in polys]
    lcs = [d[m] for d, m in zip(polys, lms)]
    h = to_engine(f)
    for full in (True, False):
        assert py.reduce_poly(h, lms, polys, lcs, key, CTX.guard, full) == compiled.reduce_poly(h, lms, polys, lcs, key, CTX.guard, full)
    assert py.leading(h, key) == compiled.leading(h, key)
    assert py.content(h) == compiled.content(h)


@needs_compiled
@settings(max_examples=60, deadline=None, derandomize=True)
@given(poly, poly)
def test_spoly_kernels_agree(f, g):
    order = TermOrder.lex(4)
    key = order.keycache(CTX)
    a, b = to_engine(f), to_engine(g)
    la, lb = py.leading(a, key), py.leading(b, key)
    lcm = CTX.lcm(la, lb)
    args = (a, la, a[la], b, lb, b[lb], lcm)
    assert py.spoly(*args) == compiled.spoly(*args)
    lead = py.leading(a, key)
    assert py.make_primitive(dict(a), lead) == compiled.make_primitive(dict(a), lead)


@needs_compiled
@pytest.mark.parametrize("order_kind", ["lex", "grevlex"])
def test_groebner_bases_identical_across_backends(restore_backend, order_kind):
    ctx = VariableContext(["a", "b", "c", "d", "e"])
    gens = [Polynomial.parse(ctx, t) for t in ["a*d - b*c + e^2", "a*c - b^2 + d", "b*d - c^2 - a*e", "a + b + c + d + e - 1"]]
    order = getattr(TermOrder, order_kind)(5)
    results = []
    for backend in ("python", "cython"):
        kernel.use(backend)
        results.append(groebner_basis(gens, order, ctx))
    assert results[0] == results[1]


@needs_compiled
def test_toric_ideal_identical_across_backends(restore_backend):
    from likgeo.statmodels import toric_ideal

    A = loglinear_matrix(Shape([2, 2, 2]), [[1, 2], [2, 3]])
    out = []
    for backend in ("python", "cython"):
        kernel.use(backend)
        I = toric_ideal(A)
        out.append(Ideal(I.ctx, I.generators).gb())
    assert out[0] == out[1]

import pytest

from likgeo.polyalgebra import Polynomial, VariableContext


@pytest.fixture
def xyz():
    ctx = VariableContext(["x", "y", "z"])
    return ctx, [Polynomial.var(ctx, n) for n in "xyz"]


def polys(ctx, *texts):
    return [Polynomial.parse(ctx, t) for t in texts]


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])

"""Compare the compiled and pure-Python reduction kernels.

Runs the same Groebner workloads under both backends and prints median wall
times.  Usage: ``python benchmarks/bench_kernels.py [--repeat N]``.
"""

import argparse
import statistics
import time

from likgeo.groebner import Ideal, kernel, saturate
from likgeo.likelihood import LikelihoodProblem, lagrange_likelihood, toric_likelihood
from likgeo.polyalgebra import TermOrder
from likgeo.statmodels import Shape, loglinear_matrix, segre_ideal


def _three_chain():
    toric_likelihood(loglinear_matrix(Shape([2, 2, 2]), [[1, 2], [2, 3]]))


def _no_three_way():
    toric_likelihood(loglinear_matrix(Shape([2, 2, 2]), [[1, 2], [1, 3], [2, 3]]))


def _lagrange_2x2():
    s = Shape([2, 2])
    lagrange_likelihood(LikelihoodProblem.from_shape(s, segre_ideal(s)), method="rabinowitsch")


def _segre_lex():
    s = Shape([2, 3, 3])
    I = segre_ideal(s)
    Ideal(I.ctx, I.generators).gb(TermOrder.lex(I.ctx.nvars))


WORKLOADS = {
    "3-chain toric": _three_chain,
    "no-3-way toric": _no_three_way,
    "2x2 lagrange (rabinowitsch)": _lagrange_2x2,
    "2x3x3 segre lex GB": _segre_lex,
}


def time_backend(backend, fn, repeat):
    kernel.use(backend)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    backends = ["python"] + (["cython"] if kernel.compiled_kernel is not None else [])
    print(f"{'workload':32s}" + "".join(f"{b:>12s}" for b in backends) + "     speedup")
    for name, fn in WORKLOADS.items():
        meds = [time_backend(b, fn, args.repeat) for b in backends]
        speed = f"{meds[0] / meds[1]:8.2f}x" if len(meds) == 2 else "     n/a"
        print(f"{name:32s}" + "".join(f"{m:12.4f}" for m in meds) + "    " + speed)
    kernel.use("cython" if kernel.compiled_kernel is not None else "python")


if __name__ == "__main__":
    main()

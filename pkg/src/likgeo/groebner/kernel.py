"""Select the compiled reduction kernel when available.

Set ``LIKGEO_PURE_PYTHON=1`` to force the pure-Python fallback.
"""

import os

from . import _kernel_py as python_kernel

compiled_kernel = None
if os.environ.get("LIKGEO_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernel as compiled_kernel  # type: ignore[no-redef]
    except ImportError:  # extension not built
        compiled_kernel = None

active = compiled_kernel if compiled_kernel is not None else python_kernel
BACKEND = active.BACKEND

find_divisor = active.find_divisor
reduce_poly = active.reduce_poly
spoly = active.spoly
content = active.content
make_primitive = active.make_primitive
leading = active.leading


def use(backend: str):
    """Switch kernels at runtime (``"python"`` or ``"cython"``); used by benchmarks."""
    global active, BACKEND, find_divisor, reduce_poly, spoly, content, make_primitive, leading
    if backend == "python":
        mod = python_kernel
    elif backend == "cython":
        if compiled_kernel is None:
            raise RuntimeError("compiled kernel is not available")
        mod = compiled_kernel
    else:
        raise ValueError(f"unknown backend {backend!r}")
    active = mod
    BACKEND = mod.BACKEND
    find_divisor = mod.find_divisor
    reduce_poly = mod.reduce_poly
    spoly = mod.spoly
    content = mod.content
    make_primitive = mod.make_primitive
    leading = mod.leading

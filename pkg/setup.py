"""Builds the optional compiled Groebner kernel.

Without Cython or a C compiler the package installs anyway and uses the
pure-Python kernel.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("LIKGEO_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/likgeo/groebner/_kernel.pyx"],
            compiler_directives={"language_level": "3"},
            quiet=True,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)

"""Build script.

The package is pure Python plus one optional Cython extension holding the
automata kernels (partition refinement, BFS numbering, word stepping and the
pair-distinguisher search).  If Cython or a C compiler is unavailable the
extension is skipped and the pure-Python backend in
``rexconf._kernels.py_backend`` is used at import time instead.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("REXCONF_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/rexconf/_kernels/c_backend.pyx"],
            compiler_directives={"language_level": "3"},
        )
        for ext in ext_modules:
            ext.extra_compile_args = ["-O3"]
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)

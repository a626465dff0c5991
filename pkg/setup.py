"""Build the optional Cython kernel; the package falls back to pure Python without it."""

import os
import warnings

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("GVINDEX_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("Cython not available; installing the pure-Python kernel only")
    else:
        ext_modules = cythonize(
            [Extension("gvindex.series._kernel", ["src/gvindex/series/_kernel.pyx"])],
            compiler_directives={"language_level": "3", "boundscheck": False,
                                 "wraparound": False},
        )

setup(ext_modules=ext_modules)

"""Build script: compiles the optional exact-elimination core.

The package is pure Python by default; if Cython is available the hot
kernel in ``src/eqderham/_rref.pyx`` is compiled and picked up at import
time.  Set ``EQDERHAM_NO_EXT=1`` to skip the extension entirely.
"""

import os

from setuptools import setup
from setuptools.extension import Extension

ext_modules = []
if not os.environ.get("EQDERHAM_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("eqderham._rref", ["src/eqderham/_rref.pyx"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)

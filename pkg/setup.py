"""Build hook for the optional compiled kernel.

The package is pure Python plus one optional Cython extension for the hot
cyclotomic arithmetic (lgorb._cycore).  If Cython is unavailable the
extension is skipped and the pure-Python kernels are used at import time.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/lgorb/_cycore.pyx"],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)

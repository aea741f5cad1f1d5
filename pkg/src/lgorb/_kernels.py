"""Kernel backend selection: compiled extension if available, else pure Python.

Set LGORB_PURE=1 to force the pure-Python kernels (used by the benchmark
and by tests that compare both backends).
"""

import os

if os.environ.get("LGORB_PURE"):
    from lgorb._kernels_py import BACKEND, add, addmul, mul, normalize
else:
    try:
        from lgorb._cycore import BACKEND, add, addmul, mul, normalize
    except ImportError:
        from lgorb._kernels_py import BACKEND, add, addmul, mul, normalize

__all__ = ["BACKEND", "normalize", "add", "mul", "addmul"]

"""Kernel selection: the compiled extension when importable, else numpy.

Set ``OCTAVIC_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
solve_mod = _kernels_py.solve_mod

if not os.environ.get("OCTAVIC_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None
    if _compiled is not None:
        solve_mod = _compiled.solve_mod
        BACKEND = "compiled"

__all__ = ["solve_mod", "BACKEND"]

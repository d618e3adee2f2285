"""Pick the compiled kernels when available, else the pure-Python ones.

Set ``EULERK_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
kernels = _kernels_py

if not os.environ.get("EULERK_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        pass
    else:
        kernels = _compiled
        BACKEND = "cython"

MODE_ALL = _kernels_py.MODE_ALL
MODE_INJECTIVE = _kernels_py.MODE_INJECTIVE
MODE_FIRST_INJECTIVE = _kernels_py.MODE_FIRST_INJECTIVE

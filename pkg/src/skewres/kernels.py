"""Selects the compiled kernels when available, else the pure-Python ones.

Set ``SKEWRES_NO_EXT=1`` to force the fallback.
"""

import os

BACKEND = "python"

if os.environ.get("SKEWRES_NO_EXT", "") in ("", "0"):
    try:
        from ._ckernels import KernelContext

        BACKEND = "cython"
    except ImportError:
        from ._pykernels import KernelContext
else:
    from ._pykernels import KernelContext

__all__ = ["KernelContext", "BACKEND"]

"""Select the character-search kernel: compiled if available, else pure Python.

Set ``FAMALG_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernel

KERNEL_NAME = "python"
search = _pykernel.search

if not os.environ.get("FAMALG_PURE_PYTHON"):
    try:
        from . import _ckernel
    except ImportError:
        pass
    else:
        KERNEL_NAME = "cython"
        search = _ckernel.search


def available():
    """Names of the importable kernels, mapped to their search functions."""
    out = {"python": _pykernel.search}
    try:
        from . import _ckernel
    except ImportError:
        return out
    out["cython"] = _ckernel.search
    return out

"""Kernel backend selection.

The compiled extension ``bipartify._ckernels`` is used when it imports;
otherwise the pure-Python module is used. Setting the environment variable
``BIPARTIFY_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"

if os.environ.get("BIPARTIFY_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels
else:
    _impl = _pykernels

movement_routine = _impl.movement_routine
gray_maxcut = _impl.gray_maxcut
gray_trace = _impl.gray_trace
jacobi_eigh = _impl.jacobi_eigh

__all__ = ["BACKEND", "movement_routine", "gray_maxcut", "gray_trace", "jacobi_eigh"]

"""Select the kernel backend at import time.

The compiled module is used when it was built; setting
``SCSDISCORD_PURE_PYTHON=1`` forces the pure-Python fallback.
"""
import os

from . import _pykernels

if os.environ.get("SCSDISCORD_PURE_PYTHON", "").strip() not in ("", "0"):
    kernels = _pykernels
else:
    try:
        from . import _ckernels as kernels
    except ImportError:
        kernels = _pykernels

BACKEND = kernels.BACKEND

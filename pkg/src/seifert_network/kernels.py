"""Sweep kernels: compiled when available, numpy otherwise.

``BACKEND`` names the implementation selected at import.  Setting
``SEIFERT_NET_PURE=1`` forces the fallback.
"""
import os

from . import _kernels_py

if os.environ.get("SEIFERT_NET_PURE"):
    _compiled = None
else:
    try:
        from . import _kernels as _compiled
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "numpy"
prism_sweep = (_compiled or _kernels_py).prism_sweep

__all__ = ["BACKEND", "prism_sweep"]

"""Backend selection for the hot kernels.

The compiled ``_speedups`` extension is used when importable; otherwise the pure
Python implementation. Set ``GSPLINE_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _purepy

BACKEND = "python"
if os.environ.get("GSPLINE_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = _purepy
    else:
        BACKEND = "cython"
else:
    _impl = _purepy

path_gcds = _impl.path_gcds
enumerate_box = _impl.enumerate_box

__all__ = ["BACKEND", "path_gcds", "enumerate_box"]

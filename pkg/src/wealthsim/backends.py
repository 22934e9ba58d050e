"""Kernel backend selection.

The compiled extension is used when importable; otherwise the numpy
fallback. Set ``WEALTHSIM_BACKEND=python`` to force the fallback or
``WEALTHSIM_BACKEND=cython`` to insist on the extension (ImportError if it
isn't built).
"""

from __future__ import annotations

import os

from . import _kernels_py


def _select():
    forced = os.environ.get("WEALTHSIM_BACKEND", "").strip().lower()
    if forced in ("python", "py", "numpy"):
        return "python", _kernels_py.advance
    try:
        from . import _kernels
    except ImportError:
        if forced in ("cython", "c", "compiled"):
            raise
        return "python", _kernels_py.advance
    return "cython", _kernels.advance


backend_name, advance = _select()


def available():
    """Name -> advance-callable for every importable backend."""
    out = {"python": _kernels_py.advance}
    try:
        from . import _kernels
        out["cython"] = _kernels.advance
    except ImportError:
        pass
    return out

"""Numba switch.

Set ``SBICON_DISABLE_NUMBA=1`` to run every kernel as plain Python over
numpy arrays. The fallback is also used when numba cannot be imported.
"""

from __future__ import annotations

import os

DISABLED = os.environ.get("SBICON_DISABLE_NUMBA", "").strip().lower() not in (
    "",
    "0",
    "false",
    "no",
)

try:
    if DISABLED:
        raise ImportError("disabled by SBICON_DISABLE_NUMBA")
    import numba as _numba
except ImportError:
    _numba = None

USING_NUMBA = _numba is not None


def njit(fn=None, **options):
    """``numba.njit`` when available, identity decorator otherwise."""
    if _numba is None:
        if fn is None:
            return lambda f: f
        return fn
    options.setdefault("cache", True)
    if fn is None:
        return _numba.njit(**options)
    return _numba.njit(**options)(fn)

"""Kernel backend selection.

The compiled Cython backend is used when available; set RINGLAB_BACKEND=pure
to force the pure-Python fallback (used by the benchmark and as a safety net
when the extension failed to build).
"""

from __future__ import annotations

import os

from . import _pure

if os.environ.get("RINGLAB_BACKEND", "").lower() == "pure":
    _impl = _pure
else:
    try:
        from . import _ck as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

BACKEND_NAME = _impl.BACKEND_NAME
vnr_witness = _impl.vnr_witness
closure = _impl.closure
sum_of_sets = _impl.sum_of_sets
prime_witness = _impl.prime_witness
nilpotent_mask = _impl.nilpotent_mask
pow_index = _impl.pow_index


def get_backend(name: str):
    """Explicit backend lookup, for the benchmark harness."""
    if name == "pure":
        return _pure
    if name == "cython":
        from . import _ck

        return _ck
    raise ValueError(f"unknown backend {name!r}")

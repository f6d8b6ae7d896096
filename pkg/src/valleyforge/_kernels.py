"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``VALLEYFORGE_PURE=1`` to force the pure-Python kernel (used by the
benchmark and by tests that cross-check the two implementations).
"""

from __future__ import annotations

import os

from . import _purecount

if os.environ.get("VALLEYFORGE_PURE"):
    _impl = _purecount
    KERNEL = "pure"
else:
    try:
        from . import _fastcount as _impl  # type: ignore[no-redef]

        KERNEL = "compiled"
    except ImportError:
        _impl = _purecount
        KERNEL = "pure"

restricted_counts = _impl.restricted_counts
restricted_count = _impl.restricted_count

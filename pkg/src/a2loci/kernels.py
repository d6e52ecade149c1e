"""Kernel backend selection.

Prefers the compiled extension, falls back to the pure-Python twin when the
extension is absent (or when ``A2LOCI_PURE_KERNEL`` is set, which is how the
benchmark and the cross-checking tests force the fallback).
"""

import os

from . import _kern_py

if os.environ.get("A2LOCI_PURE_KERNEL"):
    _backend = _kern_py
else:
    try:
        from . import _kern as _backend  # type: ignore[no-redef]
    except ImportError:
        _backend = _kern_py

lr_skew_count = _backend.lr_skew_count

BACKEND = "compiled" if _backend is not _kern_py else "pure"

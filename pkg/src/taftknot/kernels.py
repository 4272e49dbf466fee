"""Kernel backend selection.

The compiled extension is used when it was built; otherwise (or when
``TAFTKNOT_PURE_PYTHON=1`` is set) the reference implementations from
``_pykernels`` are used.  Both produce identical results.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("TAFTKNOT_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

apply_sparse = _impl.apply_sparse
bracket_state_counts = _impl.bracket_state_counts

__all__ = ["BACKEND", "apply_sparse", "bracket_state_counts"]

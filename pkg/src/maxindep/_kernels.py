"""Selects the compiled kernels when available; ``MAXINDEP_PURE=1`` forces the fallback."""

import os

from maxindep import _pykernels

if os.environ.get("MAXINDEP_PURE") == "1":
    _impl = _pykernels
else:
    try:
        from maxindep import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = _impl.BACKEND
mis_count = _impl.mis_count
canonical_labeling = _impl.canonical_labeling

"""Backend selection for the matching enumeration kernel.

The compiled ``_kernels`` extension is used when importable; setting
``LAMBDA_PFAFFIAN_PURE=1`` forces the pure-Python fallback.
"""

import functools
import os

from . import _pykernels

if os.environ.get("LAMBDA_PFAFFIAN_PURE"):
    _impl = _pykernels
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "python" if _impl is _pykernels else "compiled"

matching_table = functools.lru_cache(maxsize=None)(_impl.matching_table)
lambda_sign_histogram = functools.lru_cache(maxsize=None)(_impl.lambda_sign_histogram)

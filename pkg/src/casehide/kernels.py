"""Select the scan/histogram kernel backend at import time.

The compiled extension (built from ``_speedups.pyx``) is used when
available; otherwise the pure-Python twin takes over.  Set
``CASEHIDE_PURE=1`` in the environment to force the pure backend, e.g.
to debug or to compare behaviour.
"""

from __future__ import annotations

import os

if os.environ.get("CASEHIDE_PURE"):
    from casehide import _kernels_py as _impl
else:
    try:
        from casehide import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        from casehide import _kernels_py as _impl

BACKEND: str = _impl.BACKEND_NAME
KIND_TAG_NAME: int = _impl.KIND_TAG_NAME
KIND_ATTR_NAME: int = _impl.KIND_ATTR_NAME
scan_sites = _impl.scan_sites
byte_histogram = _impl.byte_histogram

"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ALEPHCUBE_PURE_PYTHON=1 to force the fallback (used by the benchmark
and by tests that compare the two backends).
"""

import os

if os.environ.get("ALEPHCUBE_PURE_PYTHON"):
    from . import pykernels as _impl

    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import pykernels as _impl

        BACKEND = "python"

brute_force_maps = _impl.brute_force_maps
extension_maps = _impl.extension_maps
extension_count = _impl.extension_count

__all__ = ["BACKEND", "brute_force_maps", "extension_maps", "extension_count"]

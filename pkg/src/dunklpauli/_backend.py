"""Kernel backend selection: compiled extension if available, numpy otherwise.

Set DUNKLPAULI_FORCE_PY=1 to force the pure-Python kernels (used by the
benchmark and the backend-equivalence tests).
"""

import os

if os.environ.get("DUNKLPAULI_FORCE_PY") == "1":
    from dunklpauli import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from dunklpauli import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from dunklpauli import _kernels_py as _impl

        BACKEND = "python"

sturm_count = _impl.sturm_count
bisect_lowest = _impl.bisect_lowest

"""Kernel selection: compiled extension when available, pure Python otherwise.

Set the environment variable ``ZARISKI_PURE=1`` before import to force the
pure-Python kernels even when the extension is built (used by the benchmark
and by CI to exercise the fallback path).
"""

import os

if os.environ.get("ZARISKI_PURE"):
    from zariski import _kernels_py as kernels

    BACKEND = "python"
else:
    try:
        from zariski import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        from zariski import _kernels_py as kernels  # type: ignore[no-redef]

        BACKEND = "python"


def backend_name() -> str:
    """Which kernel implementation is active: ``"c"`` or ``"python"``."""
    return BACKEND

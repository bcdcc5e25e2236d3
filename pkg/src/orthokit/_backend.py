"""Kernel backend selection.

The compiled extension is preferred when importable; setting the environment
variable ``ORTHOKIT_PURE_PYTHON=1`` forces the numpy fallback.  Both backends
are numerically interchangeable (parity is enforced by the test suite).
"""

from __future__ import annotations

import os

if os.environ.get("ORTHOKIT_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernels_py as kernels

    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]

        BACKEND = "python"


def backend_name() -> str:
    """Name of the kernel backend in use: ``"cython"`` or ``"python"``."""
    return BACKEND

"""Gate-application kernels for the dense state-vector backend.

The compiled Cython extension is preferred; a pure-numpy implementation with
the same signatures is selected when the extension is unavailable or when
``QSIMLINK_PURE_PYTHON`` is set (useful for benchmarking the two against
each other). Both operate on contiguous complex128 vectors of length 2^n
with qubit 0 as the most significant bit.
"""

import os

from . import _fallback

if os.environ.get("QSIMLINK_PURE_PYTHON"):
    _impl = _fallback
    KERNEL_BACKEND = "python"
else:
    try:
        from . import _gatekernels as _impl

        KERNEL_BACKEND = "cython"
    except ImportError:
        _impl = _fallback
        KERNEL_BACKEND = "python"

apply_single_qubit = _impl.apply_single_qubit
apply_two_qubit = _impl.apply_two_qubit

__all__ = ["apply_single_qubit", "apply_two_qubit", "KERNEL_BACKEND"]

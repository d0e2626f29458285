"""Selects the compiled product kernel when available.

Set ``ELLBUNDLE_PURE_PYTHON=1`` to force the pure-Python kernel.  The compiled
kernel works in int64 and hands over to the Python kernel on overflow, so the
two backends always return identical results.
"""
from __future__ import annotations

import os
from array import array

from . import _pykernel

try:
    if os.environ.get("ELLBUNDLE_PURE_PYTHON", "").strip() not in ("", "0"):
        raise ImportError("pure Python kernel requested")
    from . import _kernel as _ckernel
except ImportError:
    _ckernel = None

BACKEND = "cython" if _ckernel is not None else "python"

_INT64_MAX = 2 ** 63 - 1


class MulTable:
    """CSR multiplication table over ordered pairs of basis monomials."""

    __slots__ = ("size", "ptr", "col", "val", "_arrays")

    def __init__(self, size, ptr, col, val):
        self.size = size
        self.ptr = ptr
        self.col = col
        self.val = val
        self._arrays = None

    def arrays(self):
        if self._arrays is None:
            self._arrays = (array("q", self.ptr), array("q", self.col), array("q", self.val))
        return self._arrays

    @property
    def nnz(self) -> int:
        return len(self.col)


def mul_python(a, b, table: MulTable):
    return _pykernel.mul(a, b, table.size, table.ptr, table.col, table.val)


def mul_compiled(a, b, table: MulTable):
    if _ckernel is None:
        raise RuntimeError("compiled kernel is not available")
    ptr, col, val = table.arrays()
    return _ckernel.mul(array("q", a), array("q", b), table.size, ptr, col, val)


def mul(a, b, table: MulTable):
    if _ckernel is not None:
        try:
            return mul_compiled(a, b, table)
        except OverflowError:
            pass
    return mul_python(a, b, table)

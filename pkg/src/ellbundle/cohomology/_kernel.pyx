# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled multiplication kernel over int64 with overflow detection."""

cdef extern from *:
    bint __builtin_mul_overflow(long long a, long long b, long long *res) nogil
    bint __builtin_add_overflow(long long a, long long b, long long *res) nogil


def mul(const long long[:] a, const long long[:] b, Py_ssize_t size,
        const long long[:] ptr, const long long[:] col, const long long[:] val):
    """int64 version of ``_pykernel.mul``; raises OverflowError on overflow."""
    cdef long long[:] out
    cdef Py_ssize_t i, j, k, p, lo, hi
    cdef long long x, y, xy, t
    cdef bint bad = 0
    result = bytearray(8 * size)
    out = memoryview(result).cast("q")
    with nogil:
        for i in range(size):
            x = a[i]
            if x == 0:
                continue
            for j in range(size):
                y = b[j]
                if y == 0:
                    continue
                p = i * size + j
                lo = ptr[p]
                hi = ptr[p + 1]
                if lo == hi:
                    continue
                if __builtin_mul_overflow(x, y, &xy):
                    bad = 1
                    break
                for k in range(lo, hi):
                    if __builtin_mul_overflow(xy, val[k], &t) or \
                            __builtin_add_overflow(out[col[k]], t, &t):
                        bad = 1
                        break
                    out[col[k]] = t
                if bad:
                    break
            if bad:
                break
    if bad:
        raise OverflowError("int64 overflow in product kernel")
    return memoryview(result).cast("q").tolist()

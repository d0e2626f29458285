"""Pure-Python multiplication kernel (arbitrary-precision integers)."""


def mul(a, b, size, ptr, col, val):
    """Sparse product of two dense numerator vectors through a CSR table.

    Entry ``p = i * size + j`` of ``ptr`` delimits the normal form of the
    product of basis monomials ``i`` and ``j``.
    """
    out = [0] * size
    nz_b = [(j, y) for j, y in enumerate(b) if y]
    for i, x in enumerate(a):
        if not x:
            continue
        row = i * size
        for j, y in nz_b:
            p = row + j
            lo, hi = ptr[p], ptr[p + 1]
            if lo == hi:
                continue
            xy = x * y
            for k in range(lo, hi):
                out[col[k]] += xy * val[k]
    return out

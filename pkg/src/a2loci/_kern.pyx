# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Littlewood-Richardson counting kernel (twin of ``_kern_py``)."""

from libc.string cimport memset

cdef enum:
    MAXROWS = 64
    MAXCOLS = 64
    MAXBOX = 2048
    MAXCONT = 64


cdef long _walk(int i, int nboxes, int ncont,
                const int* box_r, const int* box_c,
                const int* inner, const int* outer, const int* content,
                int* counts, int* grid) noexcept nogil:
    if i == nboxes:
        return 1
    cdef int r = box_r[i]
    cdef int c = box_c[i]
    cdef int lo = 1
    cdef int hi = ncont
    cdef int e
    cdef long total = 0
    if r > 0 and c >= inner[r - 1]:
        lo = grid[(r - 1) * MAXCOLS + c] + 1
    if c + 1 < outer[r]:
        hi = grid[r * MAXCOLS + c + 1]
    for e in range(lo, hi + 1):
        if counts[e] >= content[e - 1]:
            continue
        if e > 1 and counts[e] >= counts[e - 1]:
            continue
        counts[e] += 1
        grid[r * MAXCOLS + c] = e
        total += _walk(i + 1, nboxes, ncont, box_r, box_c,
                       inner, outer, content, counts, grid)
        counts[e] -= 1
    grid[r * MAXCOLS + c] = 0
    return total


def lr_skew_count(outer, inner, content):
    """Count Littlewood-Richardson fillings of the skew shape outer/inner.

    Same contract as ``a2loci._kern_py.lr_skew_count``; ``inner`` must be
    zero-padded to len(outer).
    """
    cdef int nrows = len(outer)
    cdef int ncont = len(content)
    if nrows > MAXROWS or ncont > MAXCONT - 1:
        raise ValueError("shape too large for the compiled kernel")
    cdef int outer_a[MAXROWS]
    cdef int inner_a[MAXROWS]
    cdef int content_a[MAXCONT]
    cdef int box_r[MAXBOX]
    cdef int box_c[MAXBOX]
    cdef int counts[MAXCONT + 1]
    cdef int grid[MAXROWS * MAXCOLS]
    cdef int r, c, nboxes = 0, csum = 0
    for r in range(nrows):
        outer_a[r] = outer[r]
        inner_a[r] = inner[r]
        if outer_a[r] > MAXCOLS:
            raise ValueError("shape too large for the compiled kernel")
    for r in range(ncont):
        content_a[r] = content[r]
        csum += content_a[r]
    for r in range(nrows):
        for c in range(outer_a[r] - 1, inner_a[r] - 1, -1):
            if nboxes >= MAXBOX:
                raise ValueError("shape too large for the compiled kernel")
            box_r[nboxes] = r
            box_c[nboxes] = c
            nboxes += 1
    if nboxes != csum:
        return 0
    if nboxes == 0:
        return 1
    memset(counts, 0, sizeof(counts))
    memset(grid, 0, sizeof(grid))
    cdef long result
    with nogil:
        result = _walk(0, nboxes, ncont, box_r, box_c,
                       inner_a, outer_a, content_a, counts, grid)
    return result

"""Pure-Python Littlewood-Richardson counting kernel.

This is the reference twin of the compiled module ``a2loci._kern``; the two
must agree bit-for-bit.  The backend actually used is picked in
``a2loci.kernels``.
"""


def lr_skew_count(outer, inner, content):
    """Count Littlewood-Richardson fillings of the skew shape outer/inner.

    A filling places content[e-1] copies of each entry e (1-based) so that
    rows weakly increase, columns strictly increase, and the reverse reading
    word (rows top to bottom, each row right to left) is a lattice word.
    ``inner`` must already be padded with zeros to len(outer).
    """
    nrows = len(outer)
    ncont = len(content)
    boxes = []
    for r in range(nrows):
        for c in range(outer[r] - 1, inner[r] - 1, -1):
            boxes.append((r, c))
    nboxes = len(boxes)
    if nboxes != sum(content):
        return 0
    if nboxes == 0:
        return 1
    grid = [[0] * outer[r] for r in range(nrows)]
    counts = [0] * (ncont + 1)

    def walk(i):
        if i == nboxes:
            return 1
        r, c = boxes[i]
        lo = 1
        if r > 0 and c >= inner[r - 1]:
            lo = grid[r - 1][c] + 1
        hi = ncont
        if c + 1 < outer[r]:
            hi = grid[r][c + 1]
        row = grid[r]
        total = 0
        for e in range(lo, hi + 1):
            if counts[e] >= content[e - 1]:
                continue
            # lattice: a prefix may never contain more e's than (e-1)'s
            if e > 1 and counts[e] >= counts[e - 1]:
                continue
            counts[e] += 1
            row[c] = e
            total += walk(i + 1)
            counts[e] -= 1
        row[c] = 0
        return total

    return walk(0)

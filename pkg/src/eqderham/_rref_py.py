"""Pure-Python exact elimination kernel.

``_rref.pyx`` is the compiled twin: same two functions, bit-identical
output, selected at import time by :mod:`eqderham._backend`.  Both work on
dense integer rows so the whole reduction runs in integer arithmetic;
rational matrices are scaled row-wise before entering and rescaled on the
way out.
"""

from math import gcd

__all__ = ["rref_primitive", "merge_odd"]


def _content(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    return g


def rref_primitive(rows, ncols):
    """Reduce integer rows to the primitive echelon normal form.

    Returns ``(reduced, pivots)`` where every row is primitive (content 1)
    with a positive pivot entry, pivot columns are cleared above and below,
    and pivot columns are strictly increasing.  Dividing each row by its
    pivot gives the unique rational RREF of the row space, so the output is
    canonical: it does not depend on the order of the input rows.
    """
    work = [list(r) for r in rows]
    nrows = len(work)
    pivots = []
    r = 0
    for col in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if work[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            work[r], work[piv] = work[piv], work[r]
        row = work[r]
        g = _content(row)
        if row[col] < 0:
            g = -g
        if g != 1:
            work[r] = row = [x // g for x in row]
        p = row[col]
        for i in range(nrows):
            if i == r:
                continue
            other = work[i]
            a = other[col]
            if not a:
                continue
            new = [x * p - y * a for x, y in zip(other, row)]
            g2 = _content(new)
            if g2 > 1:
                new = [x // g2 for x in new]
            work[i] = new
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return work[:r], pivots


def merge_odd(a, b):
    """Merge two strictly increasing index tuples, counting transpositions.

    Returns ``(sign, merged)`` with ``sign = (-1)**inversions``, or ``None``
    when the tuples share an index (an odd generator squares to zero).
    """
    if not a:
        return 1, b
    if not b:
        return 1, a
    merged = []
    inv = 0
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        x, y = a[i], b[j]
        if x == y:
            return None
        if x < y:
            merged.append(x)
            i += 1
        else:
            merged.append(y)
            inv += la - i
            j += 1
    merged.extend(a[i:])
    merged.extend(b[j:])
    return (-1 if inv & 1 else 1), tuple(merged)

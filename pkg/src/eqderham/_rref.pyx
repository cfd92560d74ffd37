# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled exact elimination kernel (twin of ``_rref_py``).

Same algorithm and bit-identical output as the pure-Python module.  Rows
whose entries and multipliers fit in 31 bits are combined in C ``int64``
arithmetic (products stay below 2**62, so the difference cannot overflow);
anything larger falls back to Python big-integer arithmetic.
"""

from math import gcd

from cpython.long cimport PyLong_AsLongLongAndOverflow
from libc.stdint cimport int64_t
from libc.stdlib cimport free, malloc

cdef int64_t GUARD = <int64_t> 1 << 31

__all__ = ["rref_primitive", "merge_odd"]


cdef int64_t _gcd64(int64_t a, int64_t b) noexcept:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef object _content(list row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    return g


cdef bint _load_small(list row, int64_t *buf, Py_ssize_t n) except -1:
    cdef Py_ssize_t i
    cdef int overflow
    cdef int64_t v
    for i in range(n):
        v = PyLong_AsLongLongAndOverflow(row[i], &overflow)
        if overflow or v >= GUARD or v <= -GUARD:
            return False
        buf[i] = v
    return True


cdef list _normalize(list row):
    g = _content(row)
    if g > 1:
        return [x // g for x in row]
    return row


def rref_primitive(rows, ncols_arg):
    """Reduce integer rows to the primitive echelon normal form.

    Returns ``(reduced, pivots)``; see ``_rref_py.rref_primitive`` for the
    normal-form contract.
    """
    cdef Py_ssize_t ncols = ncols_arg
    cdef list work = [list(r) for r in rows]
    cdef Py_ssize_t nrows = len(work)
    cdef list pivots = []
    cdef Py_ssize_t r = 0, col, i, piv, k
    cdef list row, other, new
    cdef int overflow
    cdef int64_t p64, a64, v, g64
    cdef bint p_small, row_small
    cdef int64_t *pbuf = <int64_t *> malloc(ncols * sizeof(int64_t))
    cdef int64_t *obuf = <int64_t *> malloc(ncols * sizeof(int64_t))
    cdef int64_t *cbuf = <int64_t *> malloc(ncols * sizeof(int64_t))
    if pbuf == NULL or obuf == NULL or cbuf == NULL:
        free(pbuf)
        free(obuf)
        free(cbuf)
        raise MemoryError()
    try:
        for col in range(ncols):
            piv = -1
            for i in range(r, nrows):
                if (<list> work[i])[col]:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                work[r], work[piv] = work[piv], work[r]
            row = <list> work[r]
            g = _content(row)
            if row[col] < 0:
                g = -g
            if g != 1:
                row = [x // g for x in row]
                work[r] = row
            p = row[col]
            p64 = PyLong_AsLongLongAndOverflow(p, &overflow)
            p_small = not overflow and -GUARD < p64 < GUARD
            row_small = p_small and _load_small(row, pbuf, ncols)
            for i in range(nrows):
                if i == r:
                    continue
                other = <list> work[i]
                a = other[col]
                if not a:
                    continue
                a64 = PyLong_AsLongLongAndOverflow(a, &overflow)
                if (row_small and not overflow and -GUARD < a64 < GUARD
                        and _load_small(other, obuf, ncols)):
                    g64 = 0
                    for k in range(ncols):
                        v = obuf[k] * p64 - pbuf[k] * a64
                        cbuf[k] = v
                        if v:
                            g64 = _gcd64(g64, v)
                    if g64 > 1:
                        new = [cbuf[k] // g64 for k in range(ncols)]
                    else:
                        new = [cbuf[k] for k in range(ncols)]
                    work[i] = new
                else:
                    new = [x * p - y * a for x, y in zip(other, row)]
                    work[i] = _normalize(new)
            pivots.append(col)
            r += 1
            if r == nrows:
                break
    finally:
        free(pbuf)
        free(obuf)
        free(cbuf)
    return work[:r], pivots


def merge_odd(tuple a, tuple b):
    """Merge two strictly increasing index tuples, counting transpositions.

    Returns ``(sign, merged)`` with ``sign = (-1)**inversions``, or ``None``
    when the tuples share an index.
    """
    cdef Py_ssize_t la = len(a), lb = len(b)
    if la == 0:
        return 1, b
    if lb == 0:
        return 1, a
    cdef list merged = []
    cdef Py_ssize_t inv = 0, i = 0, j = 0
    while i < la and j < lb:
        x = a[i]
        y = b[j]
        if x == y:
            return None
        if x < y:
            merged.append(x)
            i += 1
        else:
            merged.append(y)
            inv += la - i
            j += 1
    while i < la:
        merged.append(a[i])
        i += 1
    while j < lb:
        merged.append(b[j])
        j += 1
    return (-1 if inv & 1 else 1), tuple(merged)

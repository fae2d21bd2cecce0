# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_kernels.py``.

Subset tables are limited to 24 points here; callers cap them at 16.
"""

from libc.stdint cimport uint64_t, uint32_t
from libc.stdlib cimport malloc, free

from . import _kernels


cdef inline int _lowbit_index(uint64_t x):
    cdef int i = 0
    while not (x & 1):
        x >>= 1
        i += 1
    return i


def closure_table(int n, nbhd):
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef uint64_t up[64]
    cdef uint64_t row, low
    cdef int p, q
    cdef Py_ssize_t a
    for p in range(n):
        up[p] = 0
    for p in range(n):
        row = nbhd[p]
        q = 0
        while row:
            if row & 1:
                up[q] |= (<uint64_t>1) << p
            row >>= 1
            q += 1
    cdef uint64_t *cl = <uint64_t *>malloc(size * sizeof(uint64_t))
    if cl == NULL:
        raise MemoryError()
    try:
        cl[0] = 0
        for a in range(1, size):
            low = (<uint64_t>a) & (-(<uint64_t>a))
            cl[a] = cl[a ^ low] | up[_lowbit_index(low)]
        return [cl[a] for a in range(size)]
    finally:
        free(cl)


def interior_table(int n, nbhd):
    cdef list cl = closure_table(n, nbhd)
    cdef uint64_t full = ((<uint64_t>1) << n) - 1
    cdef Py_ssize_t a, size = (<Py_ssize_t>1) << n
    return [full ^ <uint64_t>cl[full ^ a] for a in range(size)]


cdef uint64_t *_load(int n, flags, uint64_t miss) except NULL:
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef uint64_t *out = <uint64_t *>malloc(size * sizeof(uint64_t))
    cdef Py_ssize_t a
    if out == NULL:
        raise MemoryError()
    for a in range(size):
        out[a] = <uint64_t>a if flags[a] else miss
    return out


def subset_union(int n, flags):
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef uint64_t *out = _load(n, flags, 0)
    cdef Py_ssize_t a, bit
    cdef int i
    try:
        for i in range(n):
            bit = (<Py_ssize_t>1) << i
            for a in range(size):
                if a & bit:
                    out[a] |= out[a ^ bit]
        return [out[a] for a in range(size)]
    finally:
        free(out)


def superset_meet(int n, flags):
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef uint64_t full = ((<uint64_t>1) << n) - 1
    cdef uint64_t *out = _load(n, flags, full)
    cdef Py_ssize_t a, bit
    cdef int i
    try:
        for i in range(n):
            bit = (<Py_ssize_t>1) << i
            for a in range(size):
                if not (a & bit):
                    out[a] &= out[a | bit]
        return [out[a] for a in range(size)]
    finally:
        free(out)


def all_subsets(int n, flags):
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef unsigned char *out = <unsigned char *>malloc(size)
    cdef Py_ssize_t a, bit
    cdef int i
    if out == NULL:
        raise MemoryError()
    try:
        for a in range(size):
            out[a] = 1 if flags[a] else 0
        for i in range(n):
            bit = (<Py_ssize_t>1) << i
            for a in range(size):
                if a & bit and not out[a ^ bit]:
                    out[a] = 0
        return [out[a] for a in range(size)]
    finally:
        free(out)


cdef void _place(int p, int n, uint32_t *rows, list result):
    cdef uint32_t row, rq
    cdef uint32_t limit = (<uint32_t>1) << n
    cdef int q
    cdef bint ok
    if p == n:
        result.append(tuple([rows[q] for q in range(n)]))
        return
    for row in range(limit):
        if not (row >> p) & 1:
            continue
        ok = True
        for q in range(p):
            rq = rows[q]
            if (row >> q) & 1 and (rq & ~row):
                ok = False
                break
            if (rq >> p) & 1 and (row & ~rq):
                ok = False
                break
        if ok:
            rows[p] = row
            _place(p + 1, n, rows, result)
    rows[p] = 0


def enumerate_preorders(int n):
    cdef uint32_t rows[16]
    cdef list result = []
    if n > 16:
        raise ValueError("n too large")
    for q in range(16):
        rows[q] = 0
    _place(0, n, rows, result)
    return result


def opens_from_basis(int n, basis):
    if n > 24:
        return _kernels.opens_from_basis(n, basis)
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef unsigned char *seen = <unsigned char *>malloc(size)
    cdef uint32_t *found = <uint32_t *>malloc(size * sizeof(uint32_t))
    cdef Py_ssize_t count = 1, k, top
    cdef uint32_t b, u
    if seen == NULL or found == NULL:
        free(seen)
        free(found)
        raise MemoryError()
    try:
        for k in range(size):
            seen[k] = 0
        seen[0] = 1
        found[0] = 0
        for b in set(basis):
            top = count
            for k in range(top):
                u = found[k] | b
                if not seen[u]:
                    seen[u] = 1
                    found[count] = u
                    count += 1
        opens = [found[k] for k in range(count)]
    finally:
        free(seen)
        free(found)
    return sorted(opens, key=lambda m: (bin(m).count("1"), m))

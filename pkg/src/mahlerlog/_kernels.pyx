# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Enumeration kernel behind omega_oracle.

For every composition (k_1, ..., k_n) of m into positive parts and every sign
vector e in {-1, 1}^n with sum e_j k_j = 0, add one to the bucket indexed by
the product k_1 * ... * k_n.  Compositions are visited as partitions weighted
by their number of distinct orderings, exactly as in ``_kernels_py``.
"""

from libc.stdlib cimport calloc, free


cdef long _orderings(int *parts, int n):
    cdef long out = 1
    cdef int i, run = 1
    for i in range(2, n + 1):
        out *= i
    for i in range(1, n + 1):
        if i < n and parts[i] == parts[i - 1]:
            run += 1
        else:
            while run > 1:
                out //= run
                run -= 1
    return out


cdef long _zero_signs(int *parts, int n):
    cdef int mask, i, s
    cdef long hits = 0
    for mask in range(1 << n):
        s = 0
        for i in range(n):
            if mask & (1 << i):
                s += parts[i]
            else:
                s -= parts[i]
        if s == 0:
            hits += 1
    return hits


cdef void _walk(int *parts, int pos, int n, int rest, int largest, long *counts):
    cdef int first, lo, i
    cdef long hits, p
    if pos == n:
        if rest == 0:
            hits = _zero_signs(parts, n)
            if hits:
                p = 1
                for i in range(n):
                    p *= parts[i]
                counts[p] += hits * _orderings(parts, n)
        return
    first = largest
    if first > rest - (n - 1 - pos):
        first = rest - (n - 1 - pos)
    while first >= 1:
        if first * (n - pos) < rest:
            break
        parts[pos] = first
        _walk(parts, pos + 1, n, rest - first, first, counts)
        first -= 1


def zero_sum_counts(int n, int m, long maxprod):
    cdef long *counts
    cdef int parts[16]
    if n < 1 or n > 16:
        raise ValueError("n must lie in 1..16")
    counts = <long *> calloc(maxprod + 1, sizeof(long))
    if counts == NULL:
        raise MemoryError()
    try:
        if m >= n:
            _walk(parts, 0, n, m, m, counts)
        return [counts[i] for i in range(maxprod + 1)]
    finally:
        free(counts)

"""Pure-Python fallback for the compiled ``_kernels`` extension.

Same contract as the compiled kernel but enumerates partitions (non-increasing
part lists) and weights each by its number of distinct orderings, which keeps
it usable without a compiler.
"""

from __future__ import annotations

from collections import Counter
from itertools import product
from math import factorial, prod


def _partitions(m: int, n: int, largest: int):
    if n == 0:
        if m == 0:
            yield ()
        return
    for first in range(min(largest, m - (n - 1)), 0, -1):
        if first * n < m:
            break
        for rest in _partitions(m - first, n - 1, first):
            yield (first,) + rest


def _orderings(parts) -> int:
    out = factorial(len(parts))
    for c in Counter(parts).values():
        out //= factorial(c)
    return out


def zero_sum_counts(n: int, m: int, maxprod: int) -> list:
    if not 1 <= n <= 16:
        raise ValueError("n must lie in 1..16")
    counts = [0] * (maxprod + 1)
    for parts in _partitions(m, n, m):
        zero = 0
        for signs in product((1, -1), repeat=n):
            if sum(s * k for s, k in zip(signs, parts)) == 0:
                zero += 1
        if zero:
            counts[prod(parts)] += zero * _orderings(parts)
    return counts

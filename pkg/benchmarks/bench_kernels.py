"""Time the compiled omega-oracle kernel against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat 5]
"""

from __future__ import annotations

import argparse
import timeit

from mahlerlog import _kernels_py
from mahlerlog.rho import _max_product

try:
    from mahlerlog import _kernels
except ImportError:
    _kernels = None

CASES = [(4, 40), (5, 40), (6, 30), (6, 40)]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled kernel not built; only the fallback is timed")
    print(f"{'n':>3} {'m':>4} {'python [ms]':>12} {'compiled [ms]':>14} {'speedup':>8}")
    for n, m in CASES:
        cap = _max_product(n, m)
        py = min(timeit.repeat(lambda: _kernels_py.zero_sum_counts(n, m, cap),
                               number=1, repeat=args.repeat))
        if _kernels is None:
            print(f"{n:>3} {m:>4} {py * 1e3:>12.2f} {'-':>14} {'-':>8}")
            continue
        assert _kernels.zero_sum_counts(n, m, cap) == _kernels_py.zero_sum_counts(n, m, cap)
        c = min(timeit.repeat(lambda: _kernels.zero_sum_counts(n, m, cap),
                              number=1, repeat=args.repeat))
        print(f"{n:>3} {m:>4} {py * 1e3:>12.2f} {c * 1e3:>14.2f} {py / c:>7.1f}x")


if __name__ == "__main__":
    main()

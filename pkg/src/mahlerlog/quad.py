"""Tanh-sinh (double exponential) quadrature at arbitrary precision.

Abscissae are generated from their distance to the nearer endpoint, so an
integrable singularity sitting at an endpoint is sampled with full relative
precision.  Integrands with interior singularities or kinks should be split
into panels at those points (see :func:`quad`).
"""

from __future__ import annotations

import threading
from typing import Callable, Sequence

import mpmath
from mpmath import mpf

from .mpcore import Context, PrecisionError, resolve

MAX_LEVEL = 12

_nodes: dict[tuple[int, int], list[tuple[mpf, mpf]]] = {}
_nodes_lock = threading.Lock()


def _level_nodes(level: int, dps: int) -> list[tuple[mpf, mpf]]:
    """(distance-to-endpoint, weight) pairs for t > 0 that are new at ``level``.

    Level 0 holds t = 1, 2, 3, ...; level k > 0 holds odd multiples of 2^-k.
    The node t = 0 is handled separately by the caller.
    """
    key = (level, dps)
    with _nodes_lock:
        hit = _nodes.get(key)
    if hit is not None:
        return hit
    with mpmath.workdps(dps + 10):
        h = mpf(2) ** (-level)
        floor_d = mpf(10) ** (-2 * dps)
        half_pi = mpmath.pi / 2
        out = []
        k = 1
        while True:
            if level > 0 and k % 2 == 0:
                k += 1
                continue
            t = k * h
            u = half_pi * mpmath.sinh(t)
            e = mpmath.exp(-2 * u)
            d = 2 * e / (1 + e)
            if d < floor_d:
                break
            w = half_pi * mpmath.cosh(t) * 4 * e / (1 + e) ** 2
            out.append((d, w))
            k += 1
    with _nodes_lock:
        return _nodes.setdefault(key, out)


def tanh_sinh(f: Callable[[mpf], mpf], a, b, ctx: Context | None = None,
              max_level: int = MAX_LEVEL, strict: bool = True):
    """Integrate ``f`` over [a, b] to ``ctx.target_digits`` (plus a margin)."""
    ctx = resolve(ctx)
    dps = ctx.work_digits
    with mpmath.workdps(dps):
        a = mpmath.mpmathify(a)
        b = mpmath.mpmathify(b)
        if a == b:
            return mpf(0)
        half = (b - a) / 2
        mid = a + half
        tol = mpf(10) ** (-(ctx.target_digits + 3))

        def contribution(level):
            s = 0
            for d, w in _level_nodes(level, dps):
                off = half * d
                xl = a + off
                xr = b - off
                if xl != a:
                    s += w * f(xl)
                if xr != b:
                    s += w * f(xr)
            return s

        total = (mpmath.pi / 2) * f(mid) + contribution(0)
        estimates = [total * half]
        h = mpf(1)
        for level in range(1, max_level + 1):
            total += contribution(level)
            h /= 2
            estimates.append(total * h * half)
            if level < 3:
                continue
            d1 = abs(estimates[-1] - estimates[-2])
            d2 = abs(estimates[-1] - estimates[-3])
            scale = max(abs(estimates[-1]), mpf(1))
            if d1 == 0:
                return estimates[-1]
            if d2 != 0 and d2 < scale:
                # the error roughly squares per level; extrapolate from the last two differences
                r1 = mpmath.log(d1 / scale)
                r2 = mpmath.log(d2 / scale)
                est = mpmath.exp(r1 * r1 / r2) * scale if r2 < 0 else d1
            else:
                est = d1
            if est < tol * scale and d1 < mpmath.sqrt(tol) * scale:
                return estimates[-1]
        if strict:
            raise PrecisionError(
                f"tanh-sinh did not converge on [{mpmath.nstr(a, 8)}, {mpmath.nstr(b, 8)}] "
                f"by level {max_level} (last difference {mpmath.nstr(d1, 5)})")
        return estimates[-1]


def quad(f: Callable[[mpf], mpf], points: Sequence, ctx: Context | None = None, **kw):
    """Sum of tanh-sinh panels between consecutive ``points``."""
    ctx = resolve(ctx)
    with ctx.workdps():
        pts = [mpmath.mpmathify(p) for p in points]
        return mpmath.fsum(tanh_sinh(f, lo, hi, ctx, **kw) for lo, hi in zip(pts, pts[1:]))

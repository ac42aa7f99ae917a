"""Multiple polylogarithms as iterated integrals.

An index (a_1, ..., a_k) corresponds to the word x0^(a_1-1) x1 ... x0^(a_k-1) x1
in the letters x0 = dt/t and x1 = dt/(1-t).  We store the letters innermost
first, so ``f_0 = 1`` and ``f_i = int_0^z letter_i * f_(i-1)``.  Every
intermediate ``f_i`` is itself a multiple polylogarithm.

Three evaluation routes are provided:

* :func:`series_at_zero` -- Taylor coefficients at 0 (radius 1);
* :func:`expansion_at_one` -- coefficients of ``y^k log^j y`` with ``y = 1 - z``,
  integration constants fixed by matching at ``z = 1/2``;
* :func:`continue_path` -- Taylor stepping of the triangular ODE system along a
  path avoiding 0 and 1.
"""

from __future__ import annotations

import math
import threading
from functools import lru_cache
from typing import Sequence

import mpmath
from mpmath import mpf

X0, X1 = 0, 1


def letters_of(entries: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for a in reversed(entries):
        out.append(X1)
        out.extend([X0] * (a - 1))
    return tuple(out)


def bits(dps: int) -> int:
    return int(math.ceil(dps * math.log2(10)))


# -- route (a): power series at 0 -------------------------------------------

def terms_needed(radius, depth: int, dps: int) -> int:
    """Smallest N with radius^N N^depth / (1 - radius) below 10^-dps."""
    r = float(radius)
    if r == 0:
        return 1
    target = -dps * math.log(10) + math.log(1 - r)
    n = max(8, int(-dps * math.log(10) / math.log(r)))
    while n * math.log(r) + depth * math.log(n) > target:
        n += max(1, n // 16)
    return n


def series_at_zero(letters: Sequence[int], nterms: int) -> list[list]:
    """Coefficient lists c[i][n] of f_i for i = 1..W (index 0 is the constant 1)."""
    out = [[mpf(1)] + [mpf(0)] * nterms]
    for letter in letters:
        g = out[-1]
        f = [mpf(0)] * (nterms + 1)
        if letter == X0:
            for n in range(1, nterms + 1):
                if g[n]:
                    f[n] = g[n] / n
        else:
            acc = mpf(0)
            for n in range(1, nterms + 1):
                acc += g[n - 1]
                f[n] = acc / n
        out.append(f)
    return out


def horner(coeffs: Sequence, z):
    s = 0
    for c in reversed(coeffs):
        s = s * z + c
    return s


def values_at_small(letters: Sequence[int], z, dps: int) -> list:
    """[f_0(z), ..., f_W(z)] for |z| <= 1/2 (or any |z| < 1, more slowly)."""
    r = abs(z)
    depth = sum(1 for l in letters if l == X1)
    n = terms_needed(min(mpf(r), mpf("0.999")), depth, dps)
    coeffs = series_at_zero(letters, n)
    return [horner(c, z) for c in coeffs]


# -- route (b): expansion at 1 ------------------------------------------------

def _integrate(C: list[list], letter: int, K: int) -> list[list]:
    """Antiderivative (in y = 1 - z, constant omitted) for one letter.

    ``C[j][k]`` is the coefficient of y^k log^j y.
    Letter x1 integrates -g/y dy; letter x0 integrates -g/(1-y) dy.
    """
    J = len(C) - 1
    out = [[mpf(0)] * (K + 1) for _ in range(J + 2)]
    if letter == X0:
        src = []
        for row in C:
            acc = mpf(0)
            pref = []
            for c in row:
                acc += c
                pref.append(acc)
            src.append(pref)
        shift = 0
    else:
        src = C
        shift = 1
        for j in range(J + 1):
            c = src[j][0]
            if c:
                out[j + 1][0] -= c / (j + 1)
    # int y^p L^j dy = y^(p+1) sum_i (-1)^i j!/(j-i)! L^(j-i) / (p+1)^(i+1)
    for j in range(J + 1):
        row = src[j]
        for k in range(shift, K + 1):
            c = row[k]
            if not c:
                continue
            p = k - shift
            if p + 1 > K:
                continue
            inv = mpf(1) / (p + 1)
            fall = 1
            term = -c * inv
            for i in range(j + 1):
                out[j - i][p + 1] += term * fall
                fall *= (j - i)
                term = -term * inv
    while len(out) > 1 and not any(out[-1]):
        out.pop()
    return out


def eval_expansion(C: list[list], y, logy=None):
    if logy is None:
        logy = mpmath.log(y)
    total = 0
    lp = 1
    for row in C:
        total += lp * horner(row, y)
        lp *= logy
    return total


_exp_lock = threading.Lock()


@lru_cache(maxsize=256)
def _expansion_cached(letters: tuple[int, ...], dps: int) -> tuple:
    with mpmath.workdps(dps):
        K = bits(dps) + 30
        half = mpf(1) / 2
        anchor = values_at_small(letters, half, dps)
        logh = mpmath.log(half)
        C = [[mpf(1)] + [mpf(0)] * K]
        result = [C]
        for i, letter in enumerate(letters, start=1):
            C = _integrate(C, letter, K)
            C[0][0] += anchor[i] - eval_expansion(C, half, logh)
            result.append(C)
        return tuple(tuple(tuple(r) for r in C) for C in result)


def expansion_at_one(letters: Sequence[int], dps: int) -> tuple:
    """Expansions of f_0..f_W about z = 1 (cached per letters and precision)."""
    with _exp_lock:
        return _expansion_cached(tuple(letters), dps)


def value_at_one(letters: Sequence[int], dps: int):
    """f_W(1); finite when the outermost letter is x0."""
    if letters and letters[-1] != X0:
        raise ValueError("divergent at z = 1")
    return expansion_at_one(letters, dps)[-1][0][0]


def values_near_one(letters: Sequence[int], z, dps: int) -> list:
    exps = expansion_at_one(letters, dps)
    y = 1 - z
    logy = mpmath.log(y)
    return [eval_expansion(C, y, logy) for C in exps]


# -- route (c): analytic continuation by Taylor steps -----------------------

def _step(letters: Sequence[int], vals: list, c, h, M: int) -> list:
    """Advance [f_0..f_W] from c to c + h with M Taylor terms."""
    inv_c = 1 / c
    inv_1c = 1 / (1 - c)
    g = [mpf(1)] + [0] * M
    out = [vals[0]]
    for i, letter in enumerate(letters, start=1):
        q = [0] * M
        if letter == X0:
            prev = 0
            for m in range(M):
                prev = (g[m] - prev) * inv_c
                q[m] = prev
        else:
            prev = 0
            for m in range(M):
                prev = (g[m] + prev) * inv_1c
                q[m] = prev
        f = [vals[i]] + [q[m - 1] / m for m in range(1, M + 1)]
        out.append(horner(f, h))
        g = f
    return out


def continue_path(letters: Sequence[int], start, start_vals: list, end, dps: int) -> list:
    """Continue [f_0..f_W] along the straight segment from ``start`` to ``end``.

    The segment must avoid 0 and 1.  Each step stays within half the distance to
    the nearer singularity, so M ~ bits(dps) terms suffice per step.
    """
    M = bits(dps) + 12
    c = mpmath.mpc(start)
    end = mpmath.mpc(end)
    vals = list(start_vals)
    while True:
        R = min(abs(c), abs(1 - c))
        remaining = end - c
        dist = abs(remaining)
        if dist == 0:
            break
        if dist <= R / 2:
            h = remaining
        else:
            h = remaining * (R / 2) / dist
        vals = _step(letters, vals, c, h, M)
        c = c + h
        if h == remaining:
            break
    return vals

"""The combinatorial coefficients sigma_j(m), omega_n(m) and the function rho_n.

``rho_n(alpha)`` is the circular mean of ``(Re log(1 - alpha e^{i w}))^n``.  For
``|alpha| < 1`` it is a power series in ``x = alpha^2`` that equals a fixed linear
combination of multiple polylogarithms; for ``|alpha| > 1`` the binomial
reflection in ``log|alpha|`` reduces to ``rho_k(1/alpha)``.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Sequence

import mpmath
from mpmath import mpf

from . import iterint
from .mpcore import Context, DomainError, UnsupportedError, resolve, zeta
from .polylog import MultiIndex, _li21

try:
    from ._kernels import zero_sum_counts as _zero_sum_counts
    KERNEL = "compiled"
except ImportError:  # pragma: no cover - depends on the build
    from ._kernels_py import zero_sum_counts as _zero_sum_counts
    KERNEL = "python"


class ResourceError(RuntimeError):
    """Brute-force enumeration would exceed its size guard."""


# -- sigma and omega --------------------------------------------------------

_sigma_lock = threading.Lock()
_sigma_rows: dict[int, list[Fraction]] = {}


def _sigma_row(j: int, upto: int) -> list[Fraction]:
    """[sigma_j(0), sigma_j(1), ..., sigma_j(upto)] exactly."""
    with _sigma_lock:
        row = _sigma_rows.get(j)
        if row is not None and len(row) > upto:
            return row
    if j == 1:
        row = [Fraction(0)] + [Fraction(1, m) for m in range(1, upto + 1)]
    else:
        prev = _sigma_row(j - 1, upto)
        row = [Fraction(0)] * (upto + 1)
        acc = Fraction(0)
        for m in range(1, upto + 1):
            acc += prev[m - 1]
            row[m] = acc * j / m
    with _sigma_lock:
        old = _sigma_rows.get(j)
        if old is None or len(old) < len(row):
            _sigma_rows[j] = row
        return _sigma_rows[j]


def sigma(j: int, m: int, ctx: Context | None = None) -> Fraction:
    """sigma_j(m) = sum over compositions m_1 + ... + m_j = m of 1/(m_1 ... m_j)."""
    if j < 1 or m < 1:
        raise DomainError("sigma needs j, m >= 1")
    return _sigma_row(j, m)[m]


def omega(n: int, m: int, ctx: Context | None = None) -> Fraction:
    """omega_n(m); zero for odd m, and omega_n(0) = [n == 0]."""
    if n < 0 or m < 0:
        raise DomainError("omega needs n, m >= 0")
    if m == 0:
        return Fraction(int(n == 0))
    if m % 2 or n < 2:
        return Fraction(0)
    h = m // 2
    s = sum(comb(n, j) * sigma(j, h) * sigma(n - j, h) for j in range(1, n))
    return s * h ** n


ORACLE_MAX_N = 6
ORACLE_MAX_M = 40


def _max_product(n: int, m: int) -> int:
    q, r = divmod(m, n)
    return (q + 1) ** r * q ** (n - r)


def omega_oracle(n: int, m: int, kernel=None) -> Fraction:
    """omega_n(m) by enumerating compositions and zero-sum sign vectors."""
    if n < 0 or m < 0:
        raise DomainError("omega_oracle needs n, m >= 0")
    if n > ORACLE_MAX_N or m > ORACLE_MAX_M:
        raise ResourceError(f"omega_oracle is limited to n <= {ORACLE_MAX_N}, m <= {ORACLE_MAX_M}")
    if n == 0:
        return Fraction(int(m == 0))
    if m < n:
        return Fraction(0)
    counts = (kernel or _zero_sum_counts)(n, m, _max_product(n, m))
    total = Fraction(0)
    scale = Fraction(m ** n, 2 ** n)
    for p, c in enumerate(counts):
        if c:
            total += Fraction(c, p)
    return total * scale


# -- polylogarithmic form --------------------------------------------------

MAX_RHO_N = 10


@dataclass(frozen=True)
class RhoPolylogForm:
    n: int
    terms: tuple  # ((Fraction coefficient, MultiIndex), ...)

    def evaluate(self, x, ctx: Context | None = None):
        from .polylog import multi_li
        ctx = resolve(ctx)
        with ctx.workdps():
            return mpmath.fsum(mpf(c.numerator) / c.denominator * multi_li(w, x, ctx) for c, w in self.terms)


def _tails(total: int):
    if total == 0:
        yield ()
        return
    for a in (1, 2):
        if a <= total:
            for rest in _tails(total - a):
                yield (a,) + rest


@lru_cache(maxsize=None)
def rho_polylog_form(n: int) -> RhoPolylogForm:
    """rho_n(alpha) = (-1)^n n!/4^n sum_w 4^depth(w) Li_w(alpha^2), w = (2, {1,2}...)."""
    if not isinstance(n, int) or not 2 <= n <= MAX_RHO_N:
        raise UnsupportedError(f"rho_polylog_form supports 2 <= n <= {MAX_RHO_N}")
    base = Fraction((-1) ** n * factorial(n), 4 ** n)
    terms = []
    for tail in _tails(n - 2):
        w = MultiIndex((2,) + tail)
        terms.append((base * 4 ** w.depth, w))
    return RhoPolylogForm(n, tuple(terms))


# -- numerical evaluation -------------------------------------------------------

def _sigma_float_rows(n: int, M: int) -> list[list]:
    rows = [[mpf(0)] * (M + 1)]
    rows.append([mpf(0)] + [mpf(1) / m for m in range(1, M + 1)])
    for j in range(2, n):
        prev = rows[-1]
        row = [mpf(0)] * (M + 1)
        acc = mpf(0)
        for m in range(1, M + 1):
            acc += prev[m - 1]
            row[m] = acc * j / m
        rows.append(row)
    return rows


def rho_series(n: int, alpha, ctx: Context | None = None) -> mpf:
    """(-1)^n sum_m alpha^m omega_n(m) / m^n, truncated by |alpha|^M / (1 - |alpha|)."""
    ctx = resolve(ctx)
    if n < 2:
        raise DomainError("rho_series needs n >= 2")
    with ctx.workdps():
        alpha = mpmath.mpmathify(alpha)
        a = abs(alpha)
        if a >= 1:
            raise DomainError("rho_series needs |alpha| < 1; use rho")
        if a == 0:
            return mpf(0)
        dps = ctx.work_digits
        # terms alpha^(2h) * 2^-n * sum_j C(n,j) sigma_j(h) sigma_(n-j)(h)
        H = iterint.terms_needed(a * a, 0, dps + 2) + 2
        with mpmath.workdps(dps + 5):
            rows = _sigma_float_rows(n, H)
            x = alpha * alpha
            total = mpf(0)
            p = mpf(1)
            for h in range(1, H + 1):
                p *= x
                s = mpf(0)
                for j in range(1, n):
                    s += comb(n, j) * rows[j][h] * rows[n - j][h]
                total += p * s
            total = total * (-1) ** n / mpf(2) ** n
        return +total


class RhoEvaluator:
    """Fast evaluation of rho_n(sqrt(x)) for 0 <= x <= 1 at a fixed precision.

    Precomputes the combined Taylor coefficients at 0 (used for x <= 1/2) and the
    combined log-expansion about x = 1 (used for 1 - x <= 1/2).
    """

    def __init__(self, n: int, dps: int):
        form = rho_polylog_form(n)
        self.n = n
        self.dps = dps
        with mpmath.workdps(dps):
            N = iterint.terms_needed(mpf(1) / 2, n, dps)
            coeffs = [mpf(0)] * (N + 1)
            expansion: list[list] = []
            for c, w in form.terms:
                cf = mpf(c.numerator) / c.denominator
                letters = w.letters
                ser = iterint.series_at_zero(letters, N)[-1]
                for i, v in enumerate(ser):
                    coeffs[i] += cf * v
                exp1 = iterint.expansion_at_one(letters, dps)[-1]
                while len(expansion) < len(exp1):
                    expansion.append([mpf(0)] * len(exp1[0]))
                for j, row in enumerate(exp1):
                    dst = expansion[j]
                    for k, v in enumerate(row):
                        dst[k] += cf * v
            self.coeffs = coeffs
            self.expansion = expansion
            self.at_one = expansion[0][0]

    def at_x(self, x):
        with mpmath.workdps(self.dps):
            if x <= mpf(1) / 2:
                return iterint.horner(self.coeffs, x)
            return self.at_y(1 - x)

    def at_y(self, y):
        """Value at x = 1 - y, for 0 <= y <= 1/2 given accurately."""
        with mpmath.workdps(self.dps):
            if y == 0:
                return self.at_one
            if y > mpf(1) / 2:
                return iterint.horner(self.coeffs, 1 - y)
            return iterint.eval_expansion(self.expansion, y)


_evaluators: dict[tuple[int, int], RhoEvaluator] = {}
_eval_lock = threading.Lock()


def rho_evaluator(n: int, ctx: Context | None = None) -> RhoEvaluator:
    ctx = resolve(ctx)
    key = (n, ctx.work_digits + 5)
    with _eval_lock:
        ev = _evaluators.get(key)
    if ev is None:
        ev = RhoEvaluator(n, key[1])
        with _eval_lock:
            ev = _evaluators.setdefault(key, ev)
    return ev


def _rho4_closed(alpha, ctx: Context):
    """6 Li_{2,1,1}(x) + 3/2 Li_{2,2}(x), x = alpha^2, in depth-one terms."""
    x = alpha * alpha
    L = mpmath.log(1 - x)
    li = mpmath.polylog
    z3, z4 = zeta(3, ctx), zeta(4, ctx)
    li2c = li(2, 1 - x)
    return ((3 * li(3, x) - 3 * z3 + 6 * li(3, 1 - x)) * L - L ** 4 / 8
            + 3 * z4 - 3 * li(4, -x / (1 - x)) - 3 * li(4, x) - 3 * li(4, 1 - x)
            + mpf(3) / 4 * li(2, x) ** 2 - mpmath.log(abs(alpha)) * L ** 3
            - (mpmath.pi ** 2 / 4 + 3 * li2c) * L ** 2)


def rho4_printed(alpha, ctx: Context | None = None):
    """The depth-one rho_4 formula exactly as printed in the source (it is not correct)."""
    ctx = resolve(ctx)
    with ctx.workdps():
        alpha = mpmath.mpmathify(alpha)
        x = alpha * alpha
        L = mpmath.log(1 - x)
        li = mpmath.polylog
        li2c = li(2, 1 - x)
        return (3 * (li(3, x) - zeta(3, ctx) + li(3, 1 - x)) * L - L ** 4 / 8
                + 3 * zeta(4, ctx) - 3 * li(4, -x / (1 - x)) - 3 * li(4, x) - 3 * li(4, 1 - x)
                + mpf(3) / 4 * li2c ** 2 - mpmath.log(abs(alpha)) * L ** 3
                - (mpmath.pi ** 2 / 4 + 3 * li2c) * L ** 2)


def _rho_inside(n: int, alpha, ctx: Context):
    """rho_n(alpha) for 0 < |alpha| < 1 and n >= 2."""
    x = alpha * alpha
    if n == 2:
        return mpmath.polylog(2, x) / 2
    if n == 3:
        return -mpf(3) / 2 * _li21(x, ctx)
    if n == 4:
        return _rho4_closed(alpha, ctx)
    return rho_evaluator(n, ctx).at_x(x)


def rho(n: int, alpha, ctx: Context | None = None) -> mpf:
    """rho_n(alpha) for any real alpha."""
    ctx = resolve(ctx)
    if not isinstance(n, int) or n < 0:
        raise DomainError("rho needs an integer n >= 0")
    if n > MAX_RHO_N:
        raise UnsupportedError(f"rho supports n <= {MAX_RHO_N}")
    with ctx.workdps():
        alpha = abs(mpmath.mpmathify(alpha))
        if n == 0:
            return mpf(1)
        if n == 1:
            return mpmath.log(alpha) if alpha > 1 else mpf(0)
        if alpha == 0:
            return mpf(0)
        if alpha == 1:
            from .logsine import ls_pi_closed
            return -ls_pi_closed(n + 1, ctx) / mpmath.pi
        if alpha < 1:
            return _rho_inside(n, alpha, ctx)
        la = mpmath.log(alpha)
        inv = 1 / alpha
        total = mpf(0)
        for k in range(n + 1):
            if k == 1:
                continue  # rho_1 vanishes inside the disk
            rk = mpf(1) if k == 0 else _rho_inside(k, inv, ctx)
            total += comb(n, k) * la ** (n - k) * rk
        return total

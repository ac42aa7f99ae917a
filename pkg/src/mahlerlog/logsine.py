"""Log-sine, log-sine-cosine and extended log-sine integrals.

Quadrature routes work on subintervals of [0, pi] only: the part of [0, sigma]
beyond pi is reflected back (theta -> 2 pi - theta for log|2 sin|, theta -> theta - pi
for the mixed integrals), and a panel ending at the log-cosine singularity at pi
is flipped so that the singular endpoint becomes 0, where tanh-sinh abscissae
carry full relative precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable

import mpmath
from mpmath import mpf

from .mpcore import Context, DomainError, UnsupportedError, resolve, zeta
from .polylog import clausen, glaisher, mzv, multi_li
from .quad import quad
from .zetapoly import ZetaPoly, exp_of_homogeneous


@dataclass(frozen=True)
class LsSpec:
    """Ls_n^{(k)}(sigma); k = 0 is the plain log-sine integral."""

    n: int
    k: int = 0
    sigma: object = None

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"order n must be a positive integer, got {self.n!r}")
        if not isinstance(self.k, int) or not 0 <= self.k <= self.n - 1:
            raise DomainError(f"moment k must satisfy 0 <= k <= n-1, got {self.k!r}")


@dataclass(frozen=True)
class LscSpec:
    m: int
    n: int
    sigma: object = None

    def __post_init__(self):
        for v in (self.m, self.n):
            if not isinstance(v, int) or v < 1:
                raise DomainError(f"orders must be positive integers, got {(self.m, self.n)}")


def _sigma(sigma, ctx: Context):
    if sigma is None:
        raise DomainError("sigma is required")
    if isinstance(sigma, str):
        sigma = parse_angle(sigma)
    sigma = mpmath.mpmathify(sigma)
    if sigma < 0 or sigma > 2 * mpmath.pi:
        raise DomainError("sigma must lie in [0, 2 pi]")
    return sigma


def parse_angle(text: str):
    """'pi', '2pi/3', 'pi/3', '1.25' -> mpf at the current precision."""
    t = text.strip().lower().replace(" ", "").replace("*", "")
    if "pi" not in t:
        return mpmath.mpf(t)
    num, _, den = t.partition("/")
    head = num.replace("pi", "")
    factor = mpmath.mpf(head) if head not in ("", "+") else mpf(1)
    if head == "-":
        factor = mpf(-1)
    value = factor * mpmath.pi
    return value / mpmath.mpf(den) if den else value


def _ls(theta):
    return mpmath.log(2 * mpmath.sin(theta / 2))


def _lc(theta):
    return mpmath.log(2 * mpmath.cos(theta / 2))


def _mixed(p: int, q: int, a, b, weight: Callable | None, ctx: Context):
    """int_a^b weight(t) log^p(2 sin t/2) log^q(2 cos t/2) dt with 0 <= a < b <= pi."""
    pi = mpmath.pi
    if a >= b:
        return mpf(0)

    def f(t):
        v = weight(t) if weight is not None else mpf(1)
        if p:
            v *= _ls(t) ** p
        if q:
            v *= _lc(t) ** q
        return v

    cuts = [a] + [c for c in (pi / 3, 2 * pi / 3) if a < c < b] + [b]
    total = mpf(0)
    for lo, hi in zip(cuts, cuts[1:]):
        if q and hi == pi:
            # flip t -> pi - t so the log-cosine singularity sits at 0
            def g(s, lo=lo):
                v = weight(pi - s) if weight is not None else mpf(1)
                if p:
                    v *= _lc(s) ** p
                return v * _ls(s) ** q
            total += quad(g, [0, pi - lo], ctx)
        else:
            total += quad(f, [lo, hi], ctx)
    return total


def ls_quad(spec: LsSpec, ctx: Context | None = None) -> mpf:
    """-int_0^sigma theta^k log^(n-1-k)|2 sin(theta/2)| d theta by quadrature."""
    ctx = resolve(ctx)
    with ctx.workdps():
        sigma = _sigma(spec.sigma, ctx)
        n, k = spec.n, spec.k
        p = n - 1 - k
        pi = mpmath.pi
        w_lo = (lambda t: t ** k) if k else None
        total = _mixed(p, 0, mpf(0), min(sigma, pi), w_lo, ctx)
        if sigma > pi:
            w_hi = (lambda t: (2 * pi - t) ** k) if k else None
            total += _mixed(p, 0, 2 * pi - sigma, pi, w_hi, ctx)
        return -total


def ls(n: int, sigma, k: int = 0, ctx: Context | None = None) -> mpf:
    return ls_quad(LsSpec(n, k, sigma), ctx)


def lsc_quad(spec: LscSpec, ctx: Context | None = None) -> mpf:
    """-int_0^sigma log^(m-1)|2 sin(theta/2)| log^(n-1)|2 cos(theta/2)| d theta."""
    ctx = resolve(ctx)
    with ctx.workdps():
        sigma = _sigma(spec.sigma, ctx)
        p, q = spec.m - 1, spec.n - 1
        pi = mpmath.pi
        total = _mixed(p, q, mpf(0), min(sigma, pi), None, ctx)
        if sigma > pi:
            # theta = pi + t swaps the roles of sine and cosine
            total += _mixed(q, p, mpf(0), sigma - pi, None, ctx)
        return -total


# -- closed forms at pi ------------------------------------------------------

MAX_LS_PI = 12


def _zeta_k(k: int) -> ZetaPoly:
    return ZetaPoly.zeta(k)


@lru_cache(maxsize=None)
def _binom_series(max_deg: int) -> tuple:
    """Coefficients of binom(u, u/2) = exp(sum (-1)^k zeta(k)/k (1 - 2^(1-k)) u^k)."""
    logs = {}
    for k in range(2, max_deg + 1):
        c = Fraction((-1) ** k, k) * (1 - Fraction(2, 2 ** k))
        logs[k] = {(k, 0): _zeta_k(k) * c}
    ser = exp_of_homogeneous(logs, max_deg)
    return tuple(ser.get((m, 0), ZetaPoly()) for m in range(max_deg + 1))


def ls_pi_zeta(n: int) -> ZetaPoly:
    """Ls_n(pi) as an exact polynomial in pi and odd zeta values."""
    if not isinstance(n, int) or not 1 <= n <= MAX_LS_PI:
        raise UnsupportedError(f"ls_pi_closed supports 1 <= n <= {MAX_LS_PI}, got {n!r}")
    m = n - 1
    return -(ZetaPoly.pi() * _binom_series(MAX_LS_PI)[m] * factorial(m))


def ls_pi_closed(n: int, ctx: Context | None = None) -> mpf:
    return ls_pi_zeta(n).evaluate(resolve(ctx))


@lru_cache(maxsize=None)
def _gs_series(max_deg: int) -> dict:
    """Bivariate coefficients of gs(u, v)."""
    logs = {}
    for k in range(2, max_deg + 1):
        z = _zeta_k(k) * Fraction((-1) ** k, k)
        a = Fraction(2 ** k - 1, 2 ** k)
        part = {}
        for i in range(k + 1):
            c = -Fraction(comb(k, i), 2 ** k)
            if i in (0, k):
                c += a
            if c:
                part[(i, k - i)] = z * c
        logs[k] = part
    return exp_of_homogeneous(logs, max_deg)


def lsc_pi_zeta(m: int, n: int) -> ZetaPoly:
    if not (isinstance(m, int) and isinstance(n, int)) or m < 1 or n < 1 or m + n > MAX_LS_PI:
        raise UnsupportedError(f"lsc_pi_closed supports m, n >= 1 with m + n <= {MAX_LS_PI}")
    c = _gs_series(MAX_LS_PI).get((m - 1, n - 1), ZetaPoly())
    return -(ZetaPoly.pi() * c * (factorial(m - 1) * factorial(n - 1)))


def lsc_pi_closed(m: int, n: int, ctx: Context | None = None) -> mpf:
    return lsc_pi_zeta(m, n).evaluate(resolve(ctx))


# -- moments at pi via the double generating function --------------------------

MAX_LSD_PI = 10


@lru_cache(maxsize=None)
def _zeta_ones_table(max_w: int) -> dict:
    """zeta(r+2, {1}_k) exactly, from
    sum zeta(m+2,{1}_n) x^(m+1) y^(n+1) = 1 - exp(sum_k zeta(k) (x^k + y^k - (x+y)^k) / k).
    """
    logs = {}
    for k in range(2, max_w + 1):
        z = _zeta_k(k) * Fraction(1, k)
        part = {}
        for i in range(1, k):
            part[(i, k - i)] = z * (-comb(k, i))
        logs[k] = part
    ser = exp_of_homogeneous(logs, max_w)
    return {(i - 1, j - 1): -c for (i, j), c in ser.items() if i >= 1 and j >= 1}


def _lsd_series(max_deg: int, ctx: Context) -> dict:
    """Coefficients of the right side of the double generating function in (lambda, mu)."""
    with ctx.workdps():
        pi = mpmath.pi
        zt = _zeta_ones_table(max_deg + 2)
        I = mpmath.mpc(0, 1)

        def add(target, poly, scale):
            for key, c in poly.items():
                if sum(key) <= max_deg:
                    target[key] = target.get(key, 0) + c * scale

        def mul(a, b):
            out = {}
            for (i1, j1), c1 in a.items():
                for (i2, j2), c2 in b.items():
                    if i1 + i2 + j1 + j2 <= max_deg:
                        key = (i1 + i2, j1 + j2)
                        out[key] = out.get(key, 0) + c1 * c2
            return out

        def power(base, e):
            out = {(0, 0): mpf(1)}
            for _ in range(e):
                out = mul(out, base)
            return out

        half = mpf(1) / 2
        # e^{i pi lambda/2} and e^{i pi mu}
        e_u = {(j, 0): (I * pi * half) ** j / mpmath.factorial(j) for j in range(max_deg + 1)}
        e_v = {(0, j): (I * pi) ** j / mpmath.factorial(j) for j in range(max_deg + 1)}
        rhs: dict = {}
        # n = 0 term: (e^{i pi u} - e^{i pi v}) / (v - u) with u = lambda/2, v = mu
        for j in range(1, max_deg + 2):
            cj = -(I * pi) ** j / mpmath.factorial(j)
            for a in range(j):
                b = j - 1 - a
                if a + b <= max_deg:
                    key = (a, b)
                    rhs[key] = rhs.get(key, 0) + cj * half ** a
        u_minus_v = {(1, 0): half, (0, 1): mpf(-1)}
        for k in range(max_deg):
            for r in range(max_deg - k):
                if k + r + 1 > max_deg:
                    continue
                # lambda (-lambda)^k (u - v)^r
                base = mul({(1 + k, 0): mpf((-1) ** k)}, power(u_minus_v, r))
                if not base:
                    continue
                zeta_val = zt[(r, k)].evaluate(ctx)
                alt = multi_li((r + 2,) + (1,) * k, -1, ctx)
                add(rhs, mul(base, e_u), -zeta_val)
                add(rhs, mul(base, e_v), alt)
        return {key: -I * c for key, c in rhs.items()}


_lsd_cache: dict = {}


def lsd_pi_closed(n: int, k: int, ctx: Context | None = None) -> mpf:
    """Ls_n^{(k)}(pi) from Taylor coefficients of the double generating function."""
    ctx = resolve(ctx)
    if not (isinstance(n, int) and isinstance(k, int)) or not (1 <= n <= MAX_LSD_PI and 0 <= k <= n - 1):
        raise UnsupportedError(f"lsd_pi_closed supports 1 <= n <= {MAX_LSD_PI}, 0 <= k <= n-1")
    key = ctx.work_digits
    if key not in _lsd_cache:
        _lsd_cache[key] = _lsd_series(MAX_LSD_PI - 1, ctx)
    ser = _lsd_cache[key]
    N = n - 1 - k
    with ctx.workdps():
        c = ser.get((N, k), 0) * mpmath.factorial(N) * mpmath.factorial(k) / mpmath.mpc(0, 1) ** k
        return mpmath.re(c)


# -- extended Ls_3 ----------------------------------------------------------------

def _ls_periodic(n: int, sigma, ctx: Context):
    """Ls_n(sigma) for any real sigma >= 0 using 2 pi periodicity of the integrand."""
    two_pi = 2 * mpmath.pi
    turns = int(mpmath.floor(sigma / two_pi))
    rest = sigma - turns * two_pi
    full = 2 * ls_pi_closed(n, ctx) if turns else 0
    return turns * full + ls(n, rest, ctx=ctx)


def ls3_extended(theta, omega, ctx: Context | None = None) -> mpf:
    """Ls_3(2 theta, 2 omega) through trilogarithm and Clausen values."""
    ctx = resolve(ctx)
    with ctx.workdps():
        theta = mpmath.mpmathify(theta)
        omega = mpmath.mpmathify(omega)
        s_t = mpmath.sin(theta)
        s_to = mpmath.sin(theta + omega)
        tiny = mpmath.mpf(10) ** (-ctx.target_digits)
        if abs(s_to) < tiny or abs(s_t) < tiny:
            raise DomainError("ls3_extended is singular when sin(theta) or sin(theta + omega) vanishes")
        if omega == 0:
            return _ls_periodic(3, 2 * theta, ctx)
        ratio = s_t / s_to
        lr = mpmath.log(abs(ratio))

        def cl2(x):
            x = mpmath.fmod(x, 2 * mpmath.pi)
            if x < 0:
                x += 2 * mpmath.pi
            return mpmath.clsin(2, x)

        neg = (_ls_periodic(3, 2 * omega, ctx) / 2 - _ls_periodic(3, 2 * theta, ctx) / 2
               - _ls_periodic(3, 2 * theta + 2 * omega, ctx) / 2
               - 2 * mpmath.im(mpmath.polylog(3, ratio * mpmath.expj(omega)))
               + theta * lr ** 2
               + lr * (cl2(2 * theta) + cl2(2 * omega) - cl2(2 * theta + 2 * omega)))
        return -neg


def ls3_extended_quad(sigma, omega, ctx: Context | None = None) -> mpf:
    """Direct quadrature of -int_0^sigma log|2 sin(s/2)| log|2 sin((s+omega)/2)| ds."""
    ctx = resolve(ctx)
    with ctx.workdps():
        sigma = mpmath.mpmathify(sigma)
        omega = mpmath.mpmathify(omega)
        two_pi = 2 * mpmath.pi
        cuts = {mpf(0), sigma}
        j = 0
        while j * two_pi <= sigma + two_pi:
            for c in (j * two_pi, j * two_pi - omega):
                if 0 < c < sigma:
                    cuts.add(c)
            j += 1
        pts = sorted(cuts)

        def f(s):
            return mpmath.log(abs(2 * mpmath.sin(s / 2))) * mpmath.log(abs(2 * mpmath.sin((s + omega) / 2)))
        return -quad(f, pts, ctx)


# -- values at pi/3 and 2 pi/3 ------------------------------------------------------


def ls_pi3_closed(n: int, ctx: Context | None = None) -> mpf:
    """Ls_n(pi/3) for 2 <= n <= 8 from Clausen and Glaisher constants at pi/3."""
    ctx = resolve(ctx)
    if not isinstance(n, int) or not 2 <= n <= 8:
        raise UnsupportedError(f"ls_pi3_closed supports 2 <= n <= 8, got {n!r}")
    with ctx.workdps():
        pi = mpmath.pi
        t = pi / 3
        F = mpmath.mpf
        z3, z5, z7 = zeta(3, ctx), zeta(5, ctx), zeta(7, ctx)
        if n == 2:
            return clausen(2, t, ctx)
        if n == 3:
            return -F(7) / 108 * pi ** 3
        if n == 4:
            return pi * z3 / 2 + F(9) / 2 * clausen(4, t, ctx)
        if n == 5:
            return -(F(1543) / 19440 * pi ** 5 - 6 * glaisher((4, 1), t, ctx))
        if n == 6:
            return F(15) / 2 * pi * z5 + F(35) / 36 * pi ** 3 * z3 + F(135) / 2 * clausen(6, t, ctx)
        if n == 7:
            return -(F(74369) / 326592 * pi ** 7 + F(15) / 2 * pi * z3 ** 2 - 135 * glaisher((6, 1), t, ctx))
        return (F(13181) / 2592 * pi ** 5 * z3 + F(1225) / 24 * pi ** 3 * z5 + F(319445) / 864 * pi * z7
                + F(35) / 2 * pi ** 2 * clausen(6, t, ctx) + F(945) / 4 * clausen(8, t, ctx)
                + 315 * clausen((6, 1, 1), t, ctx))


def ls3_2pi3(ctx: Context | None = None) -> mpf:
    """Ls_3(2 pi/3) = -(13/162) pi^3 - 2 Gl_{2,1}(2 pi/3)."""
    ctx = resolve(ctx)
    with ctx.workdps():
        return -(mpf(13) / 162 * mpmath.pi ** 3 + 2 * glaisher((2, 1), 2 * mpmath.pi / 3, ctx))


def ls4_2pi3(ctx: Context | None = None) -> mpf:
    """Ls_4(2 pi/3) in multiple Clausen values at 2 pi/3."""
    ctx = resolve(ctx)
    with ctx.workdps():
        pi = mpmath.pi
        t = 2 * pi / 3
        return (mpf(31) / 18 * pi * zeta(3, ctx) + pi ** 2 / 12 * clausen(2, t, ctx)
                - mpf(3) / 2 * clausen(4, t, ctx) + 6 * clausen((2, 1, 1), t, ctx))


def circle_constants(ctx: Context | None = None) -> dict:
    """Clausen/Glaisher constants at pi/3 and 2 pi/3 solved from quadrature values of Ls_n.

    Each entry maps a name to ``{"ls": value from the Ls relations,
    "series": value from direct multiple polylogarithm evaluation}``.
    """
    ctx = resolve(ctx)
    with ctx.workdps():
        pi = mpmath.pi
        F = mpmath.mpf
        t1, t2 = pi / 3, 2 * pi / 3
        z3, z5, z7 = zeta(3, ctx), zeta(5, ctx), zeta(7, ctx)
        q1 = {n: ls(n, t1, ctx=ctx) for n in range(2, 9)}
        q2 = {n: ls(n, t2, ctx=ctx) for n in (3, 4)}
        cl8 = clausen(8, t1, ctx)
        out = {}
        out["Cl2(pi/3)"] = q1[2]
        out["Cl4(pi/3)"] = (q1[4] - pi * z3 / 2) * 2 / 9
        out["Gl41(pi/3)"] = (q1[5] + F(1543) / 19440 * pi ** 5) / 6
        out["Cl6(pi/3)"] = (q1[6] - F(15) / 2 * pi * z5 - F(35) / 36 * pi ** 3 * z3) * 2 / 135
        out["Gl61(pi/3)"] = (q1[7] + F(74369) / 326592 * pi ** 7 + F(15) / 2 * pi * z3 ** 2) / 135
        out["Cl611(pi/3)"] = (q1[8] - F(13181) / 2592 * pi ** 5 * z3 - F(1225) / 24 * pi ** 3 * z5
                              - F(319445) / 864 * pi * z7 - F(35) / 2 * pi ** 2 * out["Cl6(pi/3)"]
                              - F(945) / 4 * cl8) / 315
        out["Gl21(2pi/3)"] = -(q2[3] + F(13) / 162 * pi ** 3) / 2
        # Cl_n(pi/3) = (2^(1-n) + (-1)^n) Cl_n(2 pi/3)
        cl2b = out["Cl2(pi/3)"] / (F(1) / 2 + 1)
        cl4b = out["Cl4(pi/3)"] / (F(1) / 8 + 1)
        out["Cl211(2pi/3)"] = (q2[4] - F(31) / 18 * pi * z3 - pi ** 2 / 12 * cl2b + F(3) / 2 * cl4b) / 6
        series = {
            "Cl2(pi/3)": clausen(2, t1, ctx),
            "Cl4(pi/3)": clausen(4, t1, ctx),
            "Gl41(pi/3)": glaisher((4, 1), t1, ctx),
            "Cl6(pi/3)": clausen(6, t1, ctx),
            "Gl61(pi/3)": glaisher((6, 1), t1, ctx),
            "Cl611(pi/3)": clausen((6, 1, 1), t1, ctx),
            "Gl21(2pi/3)": glaisher((2, 1), t2, ctx),
            "Cl211(2pi/3)": clausen((2, 1, 1), t2, ctx),
        }
        return {k: {"ls": out[k], "series": series[k]} for k in out}

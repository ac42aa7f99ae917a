"""Mahler measures: mu_n(1+x+y) by three routes, and several related families.

The three routes to ``mu_n = mu_n(1 + x + y) = W_3^(n)(0)`` are

* finite differences of the hypergeometric form of ``W_3(s)``;
* the epsilon expansion ``mu_n = sqrt(3)/(2 pi) n! sum_k alpha_k beta_(n-k)``;
* the rho-quadrature split at theta = pi/6.

They share no intermediate quantity beyond elementary constants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import mpmath
from mpmath import mpf

from .logsine import LsSpec, ls_pi3_closed, ls_pi_closed, ls_quad, lsc_pi_closed
from .mpcore import (MAX_DIGITS, Context, DomainError, PrecisionError, UnsupportedError,
                     fundamental_constant, make_context, resolve)
from .polylog import dilog_inversion
from .quad import quad, tanh_sinh
from .rho import rho_evaluator

# -- W_3 and finite differences ----------------------------------------------


def _w3_raw(s):
    """W_3(s) at the current mpmath precision."""
    h = (s + 2) / 2
    f = mpmath.hyp3f2(h, h, h, 1, (s + 3) / 2, mpf(1) / 4)
    pref = mpmath.sqrt(3) / (2 * mpmath.pi) * mpmath.power(3, s + 1)
    return pref * mpmath.gamma(1 + s / 2) ** 2 / mpmath.gamma(s + 2) * f


def w3(s, ctx: Context | None = None) -> mpf:
    """Moment W_3(s) of the three-step uniform random walk, for real s > -2."""
    ctx = resolve(ctx)
    with ctx.workdps():
        s = mpmath.mpmathify(s)
        if mpmath.re(s) <= -2:
            raise DomainError("w3 needs Re s > -2")
        return _w3_raw(s)


def w3_integral(s, ctx: Context | None = None) -> mpf:
    """W_3(s) from the 2F1 integral representation (a low-precision cross-check)."""
    ctx = resolve(ctx)
    with ctx.workdps():
        s = mpmath.mpmathify(s)
        a = 1 + s / 2

        def f(t):
            # z = sin t removes the 1/sqrt(1 - z^2) endpoint singularity
            z = mpmath.sin(t)
            return z ** (1 + s) * mpmath.hyp2f1(a, a, 1, z * z / 4)

        val = tanh_sinh(f, 0, mpmath.pi / 2, ctx)
        return mpmath.sqrt(3) / mpmath.pi * mpmath.power(mpf(3) / 2, s + 1) * val


@lru_cache(maxsize=None)
def fd_weights(order: int, half_width: int) -> tuple:
    """Exact central-difference weights at nodes -p..p for the given derivative.

    Fornberg's recursion in rational arithmetic; entry j is the weight of f(j - p).
    """
    nodes = list(range(-half_width, half_width + 1))
    N = len(nodes)
    if order >= N:
        raise ValueError("stencil too small for this derivative")
    c = [[[Fraction(0)] * N for _ in range(N)] for _ in range(order + 1)]
    c[0][0][0] = Fraction(1)
    c1 = Fraction(1)
    for i in range(1, N):
        c2 = Fraction(1)
        for j in range(i):
            c3 = Fraction(nodes[i] - nodes[j])
            c2 *= c3
            for m in range(min(i, order), -1, -1):
                prev = c[m - 1][i - 1][j] if m else 0
                c[m][i][j] = (nodes[i] * c[m][i - 1][j] - m * prev) / c3
        for m in range(min(i, order), -1, -1):
            prev = c[m - 1][i - 1][i - 1] if m else 0
            c[m][i][i] = c1 / c2 * (m * prev - nodes[i - 1] * c[m][i - 1][i - 1])
        c1 = c2
    return tuple(c[order][N - 1])


MAX_FD_N = 8


def mu_n_finite_diff(n: int, ctx: Context | None = None) -> mpf:
    """mu_n(1+x+y) = W_3^(n)(0) by an exact-weight central stencil."""
    ctx = resolve(ctx)
    if not isinstance(n, int) or not 1 <= n <= MAX_FD_N:
        raise UnsupportedError(f"mu_n_finite_diff supports 1 <= n <= {MAX_FD_N}")
    D = ctx.target_digits
    p = n + 2
    step_digits = math.ceil(D / (n + 2))
    need = ctx.work_digits + n * step_digits + 10
    if need > MAX_DIGITS:
        raise PrecisionError(f"finite differences for mu_{n} at {D} digits need {need} working "
                             f"digits (> {MAX_DIGITS}); lower --digits or use the rho route")
    weights = fd_weights(n, p)
    with mpmath.workdps(need):
        h = mpf(10) ** (-step_digits)
        total = mpf(0)
        for j, w in enumerate(weights):
            if w:
                total += mpf(w.numerator) / w.denominator * _w3_raw((j - p) * h)
        val = total / h ** n
    with ctx.workdps():
        return +val


# -- epsilon expansion ------------------------------------------------------

MAX_EPS_N = 6


def a_kj(k: int, j: int) -> Fraction:
    """A_{k,j} exactly; both defining forms are computed and must agree."""
    def S(order, upto):
        return sum((Fraction(1, m ** order) for m in range(1, upto + 1)), Fraction(0))

    harmonic = S(k, 2 * j - 1) - 1 - 4 * S(k, j - 1) / 2 ** k
    direct = sum((Fraction(2 * (-1) ** (m + 1) - 1, m ** k) for m in range(2, 2 * j)), Fraction(0))
    if harmonic != direct:  # pragma: no cover - an identity
        raise ArithmeticError(f"A_{{{k},{j}}} forms disagree")
    return direct


def _partitions(n: int, largest: int | None = None):
    """Multiplicity dicts {k: m_k} with sum k m_k = n."""
    if largest is None:
        largest = n
    if n == 0:
        yield {}
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            out = dict(rest)
            out[k] = out.get(k, 0) + 1
            yield out


@dataclass(frozen=True)
class EpsilonCoefficients:
    alphas: tuple
    betas: tuple
    gammas: tuple


def _alphas(N: int, dps: int) -> list:
    parts = [list(_partitions(n)) for n in range(N + 1)]
    with mpmath.workdps(dps):
        out = [mpf(0)] * (N + 1)
        A = [mpf(0)] * (N + 1)  # A_{k,1} = 0 (empty sum)
        tol = mpf(10) ** (-dps)
        j = 1
        inv_binom = mpf(1) / 2  # 1 / C(2j, j) at j = 1
        while True:
            lead = 2 * inv_binom / j
            for n in range(N + 1):
                s = mpf(0)
                for part in parts[n]:
                    t = mpf(1)
                    for k, m in part.items():
                        t *= A[k] ** m / (factorial(m) * mpf(k) ** m)
                    s += t
                out[n] += lead * s
            bound = lead * (1 + math.log(2 * j + 1)) ** N
            if bound < tol and j > 4:
                break
            # advance A_{k,j} -> A_{k,j+1}: add m = 2j (weight -3) and m = 2j + 1 (weight 1)
            for k in range(1, N + 1):
                A[k] += -3 / mpf(2 * j) ** k + 1 / mpf(2 * j + 1) ** k
            inv_binom *= mpf(j + 1) / (2 * (2 * j + 1))
            j += 1
        return [(-1) ** n * v for n, v in enumerate(out)]


def epsilon_coeffs(N: int, ctx: Context | None = None) -> EpsilonCoefficients:
    """alpha_0..alpha_N, beta_0..beta_N and gamma_0..gamma_N."""
    ctx = resolve(ctx)
    if not isinstance(N, int) or not 0 <= N <= MAX_EPS_N:
        raise UnsupportedError(f"epsilon expansion supports 0 <= N <= {MAX_EPS_N}")
    with ctx.workdps():
        alphas = _alphas(N, ctx.work_digits + 5)
        pi = mpmath.pi
        lspi = [None] + [ls_pi_closed(k + 1, ctx) for k in range(1, N + 1)]
        gammas = [mpf(1)]
        for n in range(1, N + 1):
            gammas.append(sum(lspi[k] * gammas[n - k] / factorial(k) for k in range(1, n + 1)) / pi)
        # 3^(1+e) / (1+e) * sum gamma_n e^n
        l3 = mpmath.log(3)
        front = [3 * sum(l3 ** i / factorial(i) * (-1) ** (k - i) for i in range(k + 1))
                 for k in range(N + 1)]
        betas = [sum(front[i] * gammas[k - i] for i in range(k + 1)) for k in range(N + 1)]
        return EpsilonCoefficients(tuple(+a for a in alphas), tuple(betas), tuple(gammas))


def alpha(n: int, ctx: Context | None = None) -> mpf:
    """[e^n] 3F2((e+2)/2, (e+2)/2, (e+2)/2; 1, (e+3)/2; 1/4)."""
    return epsilon_coeffs(n, ctx).alphas[n]


def mu_n_epsilon(n: int, ctx: Context | None = None) -> mpf:
    """n-th derivative at 0 of the product of the two Taylor series (Leibniz rule)."""
    ctx = resolve(ctx)
    if not isinstance(n, int) or not 0 <= n <= MAX_EPS_N:
        raise UnsupportedError(f"mu_n_epsilon supports 0 <= n <= {MAX_EPS_N}")
    co = epsilon_coeffs(n, ctx)
    with ctx.workdps():
        s = sum(co.alphas[k] * co.betas[n - k] for k in range(n + 1))
        return mpmath.sqrt(3) / (2 * mpmath.pi) * factorial(n) * s


# -- rho quadrature -----------------------------------------------------------

MAX_RHO_QUAD_N = 8


def _ls_pi3(n: int, ctx: Context):
    return ls_quad(LsSpec(n, 0, mpmath.pi / 3), ctx)


def mu_n_rho_quad(n: int, ctx: Context | None = None) -> mpf:
    """mu_n(1+x+y) from the Ls bracket plus rho_k quadratures on [0, pi/6] and [pi/6, pi/2]."""
    ctx = resolve(ctx)
    if not isinstance(n, int) or not 1 <= n <= MAX_RHO_QUAD_N:
        raise UnsupportedError(f"mu_n_rho_quad supports 1 <= n <= {MAX_RHO_QUAD_N}")
    with ctx.workdps():
        pi = mpmath.pi
        bracket = (_ls_pi3(n + 1, ctx) - ls_pi_closed(n + 1, ctx)) / pi
        if n == 1:
            return bracket
        p6 = pi / 6
        evs = {k: rho_evaluator(k, ctx) for k in range(2, n + 1)}

        def inner(s):
            # theta = pi/6 - s; y = 1 - 4 sin^2 theta kept accurate near s = 0
            th = p6 - s
            y = 4 * mpmath.cos(p6 - s / 2) * mpmath.sin(s / 2) * (1 + 2 * mpmath.sin(th))
            return evs[n].at_y(y)

        def outer(s):
            # theta = pi/6 + s; alpha = 1/(2 sin theta), y = 1 - alpha^2
            two_sin = 2 * mpmath.sin(p6 + s)
            gap = 4 * mpmath.cos(p6 + s / 2) * mpmath.sin(s / 2)  # 2 sin theta - 1
            y = gap * (two_sin + 1) / (two_sin * two_sin)
            L = mpmath.log(two_sin)
            return mpmath.fsum(comb(n, k) * L ** (n - k) * evs[k].at_y(y) for k in range(2, n + 1))

        first = quad(inner, [0, p6], ctx)
        second = quad(outer, [0, pi / 3], ctx)
        return bracket + 2 / pi * (first + second)


def mu_conjugate_bracket(n: int, ctx: Context | None = None) -> mpf:
    """mu_n(1 + x + y_*) = (Ls_{n+1}(pi/3) - Ls_{n+1}(pi)) / pi."""
    ctx = resolve(ctx)
    if not isinstance(n, int) or n < 1:
        raise DomainError("mu_conjugate_bracket needs n >= 1")
    with ctx.workdps():
        top = ls_pi3_closed(n + 1, ctx) if n + 1 <= 8 else _ls_pi3(n + 1, ctx)
        at_pi = ls_pi_closed(n + 1, ctx) if n + 1 <= 12 else ls_quad(LsSpec(n + 1, 0, mpmath.pi), ctx)
        return (top - at_pi) / mpmath.pi


# -- mu_{m,n}(1-x, 1+x) and dilogarithmic measures ---------------------------

def mu_mn_symmetric(m: int, n: int, ctx: Context | None = None) -> mpf:
    """mu(1-x (m times), 1+x (n times)) = -Lsc_{m+1,n+1}(pi)/pi."""
    ctx = resolve(ctx)
    if m < 0 or n < 0:
        raise DomainError("m, n must be non-negative")
    if m + n > 10:
        raise UnsupportedError("mu_mn_symmetric supports m + n <= 10")
    with ctx.workdps():
        return -lsc_pi_closed(m + 1, n + 1, ctx) / mpmath.pi


def _re_li2(z):
    """Re Li_2(z) for any complex z."""
    z = mpmath.mpmathify(z)
    if isinstance(z, mpf) and z > 1:
        return dilog_inversion(z)
    return mpmath.re(mpmath.polylog(2, z))


def dilog_measure(u, v, ctx: Context | None = None) -> mpf:
    """mu(1 - u x, 1 - v x) = int_0^1 log|1 - u e(t)| log|1 - v e(t)| dt.

    On |u| = 1 or |v| = 1 the adjacent formulas coincide, so the boundary needs
    no special handling.
    """
    ctx = resolve(ctx)
    with ctx.workdps():
        u = mpmath.mpmathify(u)
        v = mpmath.mpmathify(v)
        if u == 0 or v == 0:
            raise DomainError("dilog_measure needs u, v != 0")
        if abs(u) < 1 <= abs(v):
            u, v = v, u
        au, av = abs(u), abs(v)
        if au <= 1 and av <= 1:
            return _re_li2(u * mpmath.conj(v)) / 2
        if av <= 1:
            return _re_li2(v / u) / 2
        return _re_li2(1 / (u * mpmath.conj(v))) / 2 + mpmath.log(au) * mpmath.log(av)


def lewin_li2(r, theta, ctx: Context | None = None) -> mpf:
    """Li_2(r, theta) = -1/2 int_0^r log(t^2 + 1 - 2 t cos theta) dt / t by quadrature."""
    ctx = resolve(ctx)
    with ctx.workdps():
        r = mpmath.mpmathify(r)
        theta = mpmath.mpmathify(theta)
        if r == 0:
            return mpf(0)
        c = mpmath.cos(theta)
        s2 = mpmath.sin(theta / 2) ** 2

        def f(t):
            if t < 0.5:
                return mpmath.log1p(t * t - 2 * t * c) / t
            # (1 - t)^2 + 4 t sin^2(theta/2) avoids cancellation near t = 1
            v = (1 - t) ** 2 + 4 * t * s2
            return mpmath.log(v) / t if v else mpf(0)

        pts = [0, r] if not (c == 1 and r > 1) else [0, 1, r]
        return -quad(f, pts, ctx) / 2


def dilog_measure_polar(u, v, ctx: Context | None = None) -> mpf:
    """Same quantity via Lewin's real-variable dilogarithm of modulus and angle."""
    ctx = resolve(ctx)
    with ctx.workdps():
        u = mpmath.mpmathify(u)
        v = mpmath.mpmathify(v)
        if abs(u) < 1 <= abs(v):
            u, v = v, u
        r, th = abs(u), mpmath.arg(u)
        s, tau = abs(v), mpmath.arg(v)
        if r <= 1 and s <= 1:
            return lewin_li2(r * s, th - tau, ctx) / 2
        if s <= 1:
            return lewin_li2(s / r, tau - th, ctx) / 2
        return lewin_li2(1 / (r * s), th - tau, ctx) / 2 + mpmath.log(r) * mpmath.log(s)


def dilog_measure_quad(u, v, ctx: Context | None = None) -> mpf:
    """Direct 1-D quadrature of the defining integral (oracle)."""
    ctx = resolve(ctx)
    with ctx.workdps():
        u = mpmath.mpmathify(u)
        v = mpmath.mpmathify(v)
        tau = 2 * mpmath.pi

        def f(t):
            e = mpmath.expj(tau * t)
            return mpmath.log(abs(1 - u * e)) * mpmath.log(abs(1 - v * e))

        cuts = {mpf(0), mpf(1)}
        for w in (u, v):
            if abs(w) == 1:
                t0 = (-mpmath.arg(w) / tau) % 1
                cuts.add(t0)
        return quad(f, sorted(cuts), ctx)


# -- Boyd's family and Deninger's measure --------------------------------------

def _boyd_integrand(c):
    def f(u):
        C = mpmath.cospi(2 * u)
        a = c + 2 * C
        root = mpmath.sqrt(mpmath.mpc((c * c - 1) + 4 * (c - 1) * C))
        return mpmath.log(max(abs(a + root), abs(a - root)))
    return f


def boyd_mu(c, ctx: Context | None = None) -> mpf:
    """mu(y^2 (x+1)^2 + y (x^2 + 2 c x + 1) + (x+1)^2) for real c.

    The inner integral over x is done by Jensen's formula, which gives
    log max|a +- sqrt(a^2 - b^2)| with a = c + 2 cos 2 pi u, b = 1 + 2 cos 2 pi u;
    the outer one by tanh-sinh on [0, 1/2] (the integrand is even in u), split
    where the surd changes sign.
    """
    ctx = resolve(ctx)
    with ctx.workdps():
        c = mpmath.mpmathify(c)
        if not isinstance(c, mpf):
            raise DomainError("boyd_mu needs real c")
        pts = [mpf(0), mpf(1) / 2]
        if c != 1:
            kink = -(c + 1) / 4
            if -1 < kink < 1:
                pts.insert(1, mpmath.acos(kink) / (2 * mpmath.pi))
        # a = b = 0 at cos 2 pi u = -1/2 when c = 1: a log singularity
        if c == 1:
            pts.insert(1, mpf(1) / 3)
        return 2 * quad(_boyd_integrand(c), pts, ctx)


def boyd_mu_minus1(ctx: Context | None = None) -> mpf:
    """mu_{-1} from Beta values and two 3F2 series at 1/4."""
    ctx = resolve(ctx)
    with ctx.workdps():
        q = mpf(1) / 4
        t1 = mpmath.beta(q, q) / 2 * mpmath.hyp3f2(q, q, 1, 3 * q, 5 * q, q)
        t2 = mpmath.beta(3 * q, 3 * q) / 6 * mpmath.hyp3f2(3 * q, 3 * q, 1, 5 * q, 7 * q, q)
        return (t1 - t2) / mpmath.pi


def deninger_measure(ctx: Context | None = None) -> mpf:
    """mu(1 + x + y + 1/x + 1/y) = (1/pi) int_0^{pi/3} arccosh((1 + 2 cos t)/2) dt."""
    ctx = resolve(ctx)
    with ctx.workdps():
        p3 = mpmath.pi / 3

        def f(s):
            # t = pi/3 - s, A - 1 = 2 sin(pi/3 - s/2) sin(s/2)
            e = 2 * mpmath.sin(p3 - s / 2) * mpmath.sin(s / 2)
            return mpmath.log1p(e + mpmath.sqrt(e * (2 + e)))

        return quad(f, [0, p3], ctx) / mpmath.pi


def deninger_torus(digits: int = 12, max_level: int = 7) -> mpf:
    """Low-precision 2-D quadrature of log|1 + 2 cos s + 2 cos t| over [0, pi]^2 (oracle)."""
    ctx = make_context(digits)
    with ctx.workdps():
        pi = mpmath.pi

        def inner(s):
            k = -(1 + 2 * mpmath.cos(s)) / 2
            A = 1 + 2 * mpmath.cos(s)

            def f(t):
                v = abs(A + 2 * mpmath.cos(t))
                return mpmath.log(v) if v else mpf(0)  # a node rounded onto the zero curve
            pts = [0, pi]
            if -1 < k < 1:
                pts = [0, mpmath.acos(k), pi]
            return quad(f, pts, ctx, strict=False, max_level=max_level)

        return quad(inner, [0, pi / 3, pi], ctx, strict=False, max_level=max_level) / pi ** 2


# -- catalogue ---------------------------------------------------------------

MU_ROUTES = {
    "rho": mu_n_rho_quad,
    "fd": mu_n_finite_diff,
    "epsilon": mu_n_epsilon,
}


def mu_n(n: int, route: str = "rho", ctx: Context | None = None) -> mpf:
    try:
        fn = MU_ROUTES[route]
    except KeyError:
        raise DomainError(f"unknown route {route!r}; choose from {sorted(MU_ROUTES)}") from None
    return fn(n, ctx)


def catalan(ctx: Context | None = None) -> mpf:
    return fundamental_constant("catalan", ctx)

"""Independent reference computations used only by the tests.

Nothing here calls into mahlerlog.  Each routine is a deliberately plain
implementation (direct series, brute-force enumeration, or mpmath.quad) so
that agreement with the library is meaningful.
"""

from fractions import Fraction
from itertools import product
from math import comb, factorial

import mpmath
from mpmath import mpf


def li_series(k, z, dps):
    """Li_k(z) by direct summation, |z| <= 1/2; stops once the geometric tail bound is met."""
    with mpmath.workdps(dps + 10):
        z = mpmath.mpmathify(z)
        r = abs(z)
        eps = mpf(10) ** (-dps - 5)
        s, zn, n = 0, 1, 0
        while True:
            n += 1
            zn *= z
            t = zn / mpf(n) ** k
            s += t
            if abs(t) * r / (1 - r) < eps:
                return +s


def nested_li(w, z, dps):
    """Li_w(z) = sum_{n_1 > ... > n_k > 0} z^n_1 / prod n_i^a_i by truncated nested sums (|z| <= 1/2)."""
    with mpmath.workdps(dps + 10):
        z = mpmath.mpmathify(z)
        N = int((dps + 10) * mpmath.log(10) / -mpmath.log(abs(z))) + 10 * len(w) + 20
        inner = [mpf(0)] + [1 / mpf(n) ** w[-1] for n in range(1, N + 1)]
        for a in reversed(w[:-1]):
            acc = mpf(0)
            nxt = [mpf(0)] * (N + 1)
            for n in range(1, N + 1):
                nxt[n] = acc / mpf(n) ** a
                acc += inner[n]
            inner = nxt
        s, zn = mpf(0), mpf(1)
        for n in range(1, N + 1):
            zn *= z
            s += zn * inner[n]
        return +s


def ti_series(k, x, dps):
    """Inverse tangent integral by its odd alternating series, |x| < 1."""
    with mpmath.workdps(dps + 10):
        x = mpmath.mpmathify(x)
        eps = mpf(10) ** (-dps - 5)
        s, n, xp = mpf(0), 0, x
        while True:
            t = (-1) ** n * xp / mpf(2 * n + 1) ** k
            s += t
            if abs(t) < eps:
                return +s
            n += 1
            xp *= x * x


def catalan_ramanujan(dps):
    """G = pi/8 log(2 + sqrt3) + 3/8 sum 1/((2n+1)^2 C(2n,n))."""
    with mpmath.workdps(dps + 10):
        eps = mpf(10) ** (-dps - 5)
        s, n = mpf(0), 0
        while True:
            t = mpf(1) / ((2 * n + 1) ** 2 * comb(2 * n, n))
            s += t
            if t < eps:
                break
            n += 1
        return +(mpmath.pi / 8 * mpmath.log(2 + mpmath.sqrt(3)) + 3 * s / 8)


def zeta3_apery(dps):
    """zeta(3) = 5/2 sum (-1)^(n+1) / (n^3 C(2n,n))."""
    with mpmath.workdps(dps + 10):
        eps = mpf(10) ** (-dps - 5)
        s, n = mpf(0), 1
        while True:
            t = mpf(1) / (mpf(n) ** 3 * comb(2 * n, n))
            s += t if n % 2 else -t
            if t < eps:
                return +(5 * s / 2)
            n += 1


def sigma_enum(j, m):
    """sigma_j(m) = sum over compositions k_1 + ... + k_j = m of 1/prod k_i."""
    total = Fraction(0)

    def rec(left, parts, acc):
        nonlocal total
        if parts == 0:
            if left == 0:
                total += acc
            return
        for k in range(1, left - parts + 2):
            rec(left - k, parts - 1, acc / k)

    rec(m, j, Fraction(1))
    return total


def omega_signs(n, m):
    """omega_n(m) by enumerating compositions and sign vectors (independent of the library kernel)."""
    if m == 0:
        return Fraction(int(n == 0))
    total = Fraction(0)

    def comps(left, parts):
        if parts == 1:
            yield (left,)
            return
        for k in range(1, left - parts + 2):
            for rest in comps(left - k, parts - 1):
                yield (k,) + rest

    for ks in comps(m, n):
        hits = sum(1 for eps in product((-1, 1), repeat=n) if sum(e * k for e, k in zip(eps, ks)) == 0)
        if hits:
            w = Fraction(1)
            for k in ks:
                w *= Fraction(m, k)
            total += hits * w
    return total / 2 ** n


def rho_quad(n, alpha, dps):
    """(1/2pi) int_{-pi}^{pi} (log|1 - alpha e^{iw}|)^n dw by mpmath.quad."""
    with mpmath.workdps(dps + 10):
        alpha = mpmath.mpmathify(alpha)
        f = lambda w: mpmath.log(abs(1 - alpha * mpmath.expj(w))) ** n  # noqa: E731
        pts = [-mpmath.pi, 0, mpmath.pi]
        return +(mpmath.quad(f, pts) / (2 * mpmath.pi))


def mahler2_quad(u, v, dps):
    """mu(1 - u x, 1 - v x) = (1/2pi) int log|1 - u e^{it}| log|1 - v e^{it}| dt."""
    with mpmath.workdps(dps + 10):
        u, v = mpmath.mpmathify(u), mpmath.mpmathify(v)
        f = lambda t: (mpmath.log(abs(1 - u * mpmath.expj(t)))  # noqa: E731
                       * mpmath.log(abs(1 - v * mpmath.expj(t))))
        pts = sorted({mpf(0), 2 * mpmath.pi} | {(-mpmath.arg(c)) % (2 * mpmath.pi) for c in (u, v)})
        return +(mpmath.quad(f, pts) / (2 * mpmath.pi))


def ls_mpquad(n, sigma, dps, k=0):
    """-int_0^sigma t^k log^(n-1-k)|2 sin(t/2)| dt with mpmath.quad."""
    with mpmath.workdps(dps + 10):
        sigma = mpmath.mpmathify(sigma)
        f = lambda t: t ** k * mpmath.log(abs(2 * mpmath.sin(t / 2))) ** (n - 1 - k)  # noqa: E731
        pts = [0] + [p for p in (mpmath.pi / 3, 5 * mpmath.pi / 3) if p < sigma] + [sigma]
        return +(-mpmath.quad(f, pts))


def torus_moment(p, dps=20):
    """(1/4pi^2) double integral of |1 + e^{ix} + e^{iy}|^p (even integer p) via mpmath.quad."""
    with mpmath.workdps(dps + 5):
        f = lambda x, y: abs(1 + mpmath.expj(x) + mpmath.expj(y)) ** p  # noqa: E731
        return +(mpmath.quad(f, [0, 2 * mpmath.pi], [0, 2 * mpmath.pi]) / (4 * mpmath.pi ** 2))


def fd_weights_sympy_free(order, half_width):
    """Central finite-difference weights by solving the Vandermonde system exactly."""
    pts = list(range(-half_width, half_width + 1))
    size = len(pts)
    A = [[Fraction(p) ** i for p in pts] for i in range(size)]
    b = [Fraction(factorial(order) if i == order else 0) for i in range(size)]
    for col in range(size):
        piv = next(r for r in range(col, size) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        b[col], b[piv] = b[piv], b[col]
        for r in range(size):
            if r != col and A[r][col] != 0:
                f = A[r][col] / A[col][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
                b[r] -= f * b[col]
    return tuple(b[i] / A[i][i] for i in range(size))


def re_li21_quad(z, dps):
    """Re Li_{2,1}(z), z > 0 real, as int_0^z Re log^2(1 - t) / (2t) dt on the upper side of the cut."""
    with mpmath.workdps(dps + 10):
        z = mpmath.mpmathify(z)

        def f(t):
            lg = mpmath.log(abs(1 - t))
            return (lg * lg - (mpmath.pi ** 2 if t > 1 else 0)) / (2 * t)

        pts = [0, 1, z] if z > 1 else [0, z]
        return +mpmath.quad(f, pts)

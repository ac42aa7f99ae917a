from fractions import Fraction

import mpmath
import pytest

from conftest import assert_digits
import frozen
import oracles
from mahlerlog import logsine, mahler, polylog
from mahlerlog.mpcore import DomainError, PrecisionError, UnsupportedError, make_context, zeta
from mahlerlog.quad import quad


def test_w3_integer_moments(ctx):
    with ctx.workdps():
        assert_digits(mahler.w3(0, ctx), 1, 48)
        assert_digits(mahler.w3(2, ctx), 3, 48)
        assert_digits(mahler.w3(4, ctx), 15, 48)
    assert_digits(oracles.torus_moment(4), 15, 15)


def test_w3_integral_cross_check():
    c = make_context(20)
    with c.workdps():
        s = mpmath.mpf("0.5")
        assert_digits(mahler.w3_integral(s, c), mahler.w3(s, c), 15)


def test_w3_domain(ctx):
    with pytest.raises(DomainError):
        mahler.w3(-2, ctx)


@pytest.mark.parametrize("order,p", [(1, 3), (2, 4), (3, 5), (6, 8)])
def test_fd_weights_vs_vandermonde(order, p):
    assert mahler.fd_weights(order, p) == oracles.fd_weights_sympy_free(order, p)


def test_a_kj():
    assert mahler.a_kj(1, 1) == 0
    # m = 2, 3: (2(-1)^3 - 1)/2 + (2 - 1)/3
    assert mahler.a_kj(1, 2) == Fraction(-3, 2) + Fraction(1, 3)
    for k in range(1, 5):
        for j in range(1, 8):
            S = lambda order, upto: sum((Fraction(1, m ** order) for m in range(1, upto + 1)), Fraction(0))  # noqa: E731
            assert mahler.a_kj(k, j) == S(k, 2 * j - 1) - 1 - 4 * S(k, j - 1) / 2 ** k


def test_alpha_closed_forms(ctx):
    with ctx.workdps():
        pi, l3 = mpmath.pi, mpmath.log(3)
        pref = 2 / (3 * mpmath.sqrt(3))
        ls = lambda n, s: logsine.ls(n, s, ctx=ctx)  # noqa: E731
        assert_digits(mahler.alpha(0, ctx), 2 * pi / (3 * mpmath.sqrt(3)), 48)
        assert_digits(mahler.alpha(1, ctx), pref * (pi - pi * l3 + ls(2, pi / 3)), 48)
        a2 = pref * (pi ** 3 / 72 - pi * l3 + pi * l3 ** 2 / 2 + (1 - l3) * ls(2, pi / 3)
                     + mpmath.mpf(3) / 2 * ls(3, pi / 3) + mpmath.mpf(3) / 2 * ls(3, 2 * pi / 3)
                     - 3 * ls(3, pi))
        assert_digits(mahler.alpha(2, ctx), a2, 45)


def test_gamma_recursion(ctx):
    co = mahler.epsilon_coeffs(5, ctx)
    with ctx.workdps():
        assert co.gammas[0] == 1
        for n in range(1, 6):
            rec = sum(logsine.ls_pi_closed(k + 1, ctx) * co.gammas[n - k] / mpmath.factorial(k)
                      for k in range(1, n + 1)) / mpmath.pi
            assert_digits(co.gammas[n], rec, 48)


def test_epsilon_range(ctx):
    with pytest.raises(UnsupportedError):
        mahler.mu_n_epsilon(7, ctx)


def test_mu1_closed(ctx):
    with ctx.workdps():
        ref = polylog.clausen(2, mpmath.pi / 3, ctx) / mpmath.pi
        for route in ("fd", "rho", "epsilon"):
            assert_digits(mahler.mu_n(1, route, ctx), ref, 45)
    assert_digits(ref, frozen.val("mu1"), 48)


def test_mu2_closed(ctx):
    with ctx.workdps():
        pi = mpmath.pi
        ref = 3 / pi * logsine.ls(3, 2 * pi / 3, ctx=ctx) + pi ** 2 / 4
        assert_digits(mahler.mu_n_epsilon(2, ctx), ref, 45)


def test_mu3_epsilon_theorem(ctx):
    with ctx.workdps():
        pi = mpmath.pi
        t = pi / 3
        ref = ((15 * logsine.ls(4, 2 * pi / 3, ctx=ctx)
                - 18 * logsine.lsc_quad(logsine.LscSpec(2, 3, t), ctx)
                - 15 * polylog.clausen(4, t, ctx)) / pi
               - pi / 4 * polylog.clausen(2, t, ctx) - 17 * zeta(3, ctx))
        assert_digits(mahler.mu_n_epsilon(3, ctx), ref, 45)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("route", ["fd", "rho"])
def test_mu_published(n, route, ctx):
    with ctx.workdps():
        v = mahler.mu_n(n, route, ctx)
    assert_digits(v, frozen.val(n), 45)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_route_agreement(n, ctx):
    with ctx.workdps():
        fd = mahler.mu_n_finite_diff(n, ctx)
        tol = mpmath.mpf(10) ** -45
        assert abs(mahler.mu_n_epsilon(n, ctx) - fd) < tol
        assert abs(mahler.mu_n_rho_quad(n, ctx) - fd) < tol


def test_epsilon_extended_range(ctx):
    with ctx.workdps():
        for n in (5, 6):
            assert_digits(mahler.mu_n_epsilon(n, ctx), mahler.mu_n_finite_diff(n, ctx), 40)


def test_fd_precision_guard():
    with pytest.raises(PrecisionError):
        mahler.mu_n_finite_diff(8, make_context(6000))


def test_unknown_route(ctx):
    with pytest.raises(DomainError):
        mahler.mu_n(2, "nope", ctx)


def test_conjugate_bracket(ctx):
    with ctx.workdps():
        pi = mpmath.pi
        assert_digits(mahler.mu_conjugate_bracket(1, ctx), polylog.clausen(2, pi / 3, ctx) / pi, 48)
        assert_digits(mahler.mu_conjugate_bracket(2, ctx), pi ** 2 / 54, 48)
        ref = (logsine.ls(4, pi / 3, ctx=ctx) - mpmath.mpf(3) / 2 * pi * zeta(3, ctx)) / pi
        assert_digits(mahler.mu_conjugate_bracket(3, ctx), ref, 45)


def test_symmetric_values(ctx):
    with ctx.workdps():
        pi = mpmath.pi
        z = {k: zeta(k, ctx) for k in (3, 5, 7, 9)}
        assert_digits(mahler.mu_mn_symmetric(2, 1, ctx), z[3] / 4, 48)
        ref = (mpmath.mpf(315) / 4 * z[9] + mpmath.mpf(135) / 32 * pi ** 2 * z[7]
               + mpmath.mpf(309) / 128 * pi ** 4 * z[5] - mpmath.mpf(45) / 256 * pi ** 6 * z[3]
               - mpmath.mpf(1575) / 32 * z[3] ** 3)
        assert_digits(mahler.mu_mn_symmetric(6, 3, ctx), ref, 45)
        assert mahler.mu_mn_symmetric(0, 0, ctx) == 1


def test_symmetric_vs_quadrature(ctx):
    with ctx.workdps():
        with mpmath.workdps(60):
            f = lambda t: (mpmath.log(abs(1 - mpmath.expj(t))) ** 2  # noqa: E731
                           * mpmath.log(abs(1 + mpmath.expj(t))))
            ref = mpmath.quad(f, [0, mpmath.pi, 2 * mpmath.pi]) / (2 * mpmath.pi)
        assert_digits(mahler.mu_mn_symmetric(2, 1, ctx), ref, 40)


def test_symmetric_range(ctx):
    with pytest.raises(UnsupportedError):
        mahler.mu_mn_symmetric(6, 5, ctx)


def test_dilog_measure_real_cases(ctx):
    with ctx.workdps():
        assert_digits(mahler.dilog_measure(1, 1, ctx), mpmath.pi ** 2 / 12, 48)
        ref = polylog.li(2, mpmath.mpf(1) / 6, ctx) / 2 + mpmath.log(2) * mpmath.log(3)
        assert_digits(mahler.dilog_measure(2, 3, ctx), ref, 48)
        assert_digits(mahler.dilog_measure(2, mpmath.mpf(1) / 2, ctx), polylog.li(2, mpmath.mpf(1) / 4, ctx) / 2, 48)
        assert_digits(mahler.dilog_measure(2, mpmath.mpf(1) / 2, ctx), frozen.val("dilog_2_half"), 48)


@pytest.mark.parametrize("u,v", [
    (mpmath.mpc(0.6, 0.5), mpmath.mpc(-0.3, 0.2)),
    (mpmath.mpc(1.5, 1.0), mpmath.mpc(0.2, -0.7)),
    (mpmath.mpc(0.5, 0.5), mpmath.mpc(-1.2, 1.4)),
    (mpmath.mpc(-1.1, 2.0), mpmath.mpc(1.3, -1.9)),
    (mpmath.mpc(0, 1), 2),
])
def test_dilog_measure_complex(u, v, ctx):
    with ctx.workdps():
        val = mahler.dilog_measure(u, v, ctx)
        assert_digits(val, mahler.dilog_measure_polar(u, v, ctx), 40)
        assert_digits(val, mahler.dilog_measure_quad(u, v, ctx), 40)
        assert_digits(val, oracles.mahler2_quad(u, v, 50), 35)


def test_dilog_measure_domain(ctx):
    with pytest.raises(DomainError):
        mahler.dilog_measure(0, 1, ctx)


def test_boyd_three(ctx):
    with ctx.workdps():
        G = mahler.catalan(ctx)
        assert_digits(mahler.boyd_mu(3, ctx), 16 * G / (3 * mpmath.pi), 40)
    assert_digits(G, frozen.val("catalan"), 48)


def test_boyd_minus_five(ctx):
    with ctx.workdps():
        ref = 20 / (3 * mpmath.pi) * polylog.clausen(2, mpmath.pi / 3, ctx)
        assert_digits(mahler.boyd_mu(-5, ctx), ref, 40)


def test_boyd_one_is_zero(ctx):
    with ctx.workdps():
        assert abs(mahler.boyd_mu(1, ctx)) < mpmath.mpf(10) ** -45


def test_boyd_minus_one(ctx):
    with ctx.workdps():
        assert_digits(mahler.boyd_mu(-1, ctx), mahler.boyd_mu_minus1(ctx), 40)


def test_boyd_domain(ctx):
    with pytest.raises(DomainError):
        mahler.boyd_mu(mpmath.mpc(1, 1), ctx)


def test_deninger(ctx):
    with ctx.workdps():
        v = mahler.deninger_measure(ctx)
        assert mpmath.nstr(v, 14) == "0.25133043371325"
        assert abs(v - mahler.deninger_torus()) < mpmath.mpf(10) ** -10


@pytest.mark.parametrize("a,b", [(1, 2), (3, 1), (1, 1)])
def test_jensen_base_case(a, b, ctx):
    with ctx.workdps():
        f = lambda t: mpmath.log(abs(a * mpmath.expj(t) + b))  # noqa: E731
        val = quad(f, [0, mpmath.pi, 2 * mpmath.pi], ctx) / (2 * mpmath.pi)
        ref = max(mpmath.log(a), mpmath.log(b))
        assert abs(val - ref) < mpmath.mpf(10) ** -45


@pytest.mark.parametrize("m", range(1, 6))
def test_w2_derivatives(m, ctx):
    with ctx.workdps():
        with mpmath.workdps(ctx.work_digits + 40):
            w2 = lambda s: mpmath.gamma(1 + s) / mpmath.gamma(1 + s / 2) ** 2  # noqa: E731
            d = mpmath.diff(w2, 0, m)
        assert_digits(d, -logsine.ls_pi_closed(m + 1, ctx) / mpmath.pi, 45)


def test_prop_mu2_part_a(ctx):
    with ctx.workdps():
        pi = mpmath.pi
        f = lambda t: mpmath.re(polylog.li(2, 4 * mpmath.sin(t) ** 2, ctx)) if 4 * mpmath.sin(t) ** 2 != 1 \
            else mpmath.pi ** 2 / 6  # noqa: E731
        val = 2 / pi * quad(f, [0, pi / 6, pi / 2, 5 * pi / 6, pi], ctx)
        assert_digits(val, 2 * zeta(2, ctx), 45)


def test_fed1(ctx):
    with ctx.workdps():
        pi = mpmath.pi

        def f(t):
            x = 4 * mpmath.sin(t) ** 2
            return mpmath.re(polylog.li(2, x, ctx)) + polylog.li(2, 1 / x, ctx)

        val = quad(f, [pi / 6, pi / 2], ctx)
        assert_digits(val, 5 * pi ** 3 / 54, 45)

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from conftest import assert_digits
import frozen
import oracles
from mahlerlog import logsine, mahler, polylog
from mahlerlog.logsine import LscSpec, LsSpec
from mahlerlog.mpcore import DomainError, UnsupportedError, make_context, zeta


def test_spec_validation():
    with pytest.raises(DomainError):
        LsSpec(0, 0, 1)
    with pytest.raises(DomainError):
        LsSpec(3, 3, 1)
    with pytest.raises(DomainError):
        LscSpec(0, 2, 1)


@pytest.mark.parametrize("sigma", [-0.1, 7])
def test_sigma_out_of_range(sigma, ctx):
    with pytest.raises(DomainError):
        logsine.ls(2, sigma, ctx=ctx)


def test_parse_angle():
    with mpmath.workdps(40):
        assert logsine.parse_angle("2pi/3") == 2 * mpmath.pi / 3
        assert logsine.parse_angle("pi") == mpmath.pi
        assert logsine.parse_angle("0.5") == mpmath.mpf("0.5")


def test_ls1_is_minus_sigma(ctx):
    with ctx.workdps():
        assert_digits(logsine.ls_quad(LsSpec(1, 0, mpmath.pi), ctx), -mpmath.pi, 48)


def test_first_moment_at_pi(ctx):
    with ctx.workdps():
        assert_digits(logsine.ls_quad(LsSpec(2, 1, mpmath.pi), ctx), -mpmath.pi ** 2 / 2, 48)


def test_ls3_pi(ctx):
    with ctx.workdps():
        assert_digits(logsine.ls(3, mpmath.pi, ctx=ctx), -mpmath.pi ** 3 / 12, 48)


def test_ls_pi_examples(ctx):
    with ctx.workdps():
        pi = mpmath.pi
        assert abs(logsine.ls_pi_closed(2, ctx)) < mpmath.mpf(10) ** -50
        assert_digits(logsine.ls_pi_closed(6, ctx),
                      mpmath.mpf(45) / 2 * pi * zeta(5, ctx) + mpmath.mpf(5) / 4 * pi ** 3 * zeta(3, ctx), 48)


def test_ls_pi_out_of_range(ctx):
    with pytest.raises(UnsupportedError):
        logsine.ls_pi_closed(13, ctx)


@pytest.mark.parametrize("n", range(1, 9))
def test_ls_pi_closed_vs_quad(n, ctx):
    with ctx.workdps():
        assert_digits(logsine.ls_pi_closed(n, ctx), logsine.ls(n, mpmath.pi, ctx=ctx), 40)


@pytest.mark.parametrize("n", [3, 5])
def test_ls_quad_vs_mpmath(n, ctx):
    with ctx.workdps():
        sigma = mpmath.mpf(2)
        assert_digits(logsine.ls(n, sigma, ctx=ctx), oracles.ls_mpquad(n, sigma, 50), 40)


def test_lsd_examples(ctx):
    with ctx.workdps():
        pi = mpmath.pi
        assert_digits(logsine.lsd_pi_closed(2, 1, ctx), -pi ** 2 / 2, 45)
        assert_digits(logsine.lsd_pi_closed(4, 0, ctx), logsine.ls_pi_closed(4, ctx), 45)
        v = logsine.lsd_pi_closed(4, 1, ctx)
        assert_digits(v, logsine.ls_quad(LsSpec(4, 1, pi), ctx), 40)
    assert_digits(v, frozen.val("ls4_1_pi"), 45)


@pytest.mark.parametrize("n,k", [(3, 1), (3, 2), (5, 2), (6, 3)])
def test_lsd_vs_quad(n, k, ctx):
    with ctx.workdps():
        assert_digits(logsine.lsd_pi_closed(n, k, ctx),
                      oracles.ls_mpquad(n, mpmath.pi, 50, k=k), 40)


def test_lsd_out_of_range(ctx):
    with pytest.raises(UnsupportedError):
        logsine.lsd_pi_closed(4, 4, ctx)


def test_lsc_degenerates_to_ls(ctx):
    with ctx.workdps():
        t = mpmath.pi / 3
        assert_digits(logsine.lsc_quad(LscSpec(3, 1, t), ctx), logsine.ls(3, t, ctx=ctx), 48)
        assert_digits(logsine.lsc_pi_closed(5, 1, ctx), logsine.ls_pi_closed(5, ctx), 48)


def test_lsc_pi_examples(ctx):
    with ctx.workdps():
        pi, z3, z5 = mpmath.pi, zeta(3, ctx), zeta(5, ctx)
        assert_digits(logsine.lsc_pi_closed(3, 2, ctx), -pi * z3 / 4, 48)
        assert_digits(logsine.lsc_pi_closed(4, 3, ctx),
                      -pi * (mpmath.mpf(3) / 4 * z5 - pi ** 2 * z3 / 8), 48)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 7) for n in range(1, 7) if m + n <= 7])
def test_lsc_closed_vs_quad(m, n, ctx):
    with ctx.workdps():
        assert_digits(logsine.lsc_pi_closed(m, n, ctx), logsine.lsc_quad(LscSpec(m, n, mpmath.pi), ctx), 40)


def test_lsc_beyond_pi_vs_mpmath(ctx):
    with ctx.workdps():
        sigma = 4 * mpmath.pi / 3
        with mpmath.workdps(60):
            f = lambda t: mpmath.log(abs(2 * mpmath.sin(t / 2))) * mpmath.log(abs(2 * mpmath.cos(t / 2)))  # noqa: E731
            ref = -mpmath.quad(f, [0, mpmath.pi / 3, mpmath.pi, sigma])
        assert_digits(logsine.lsc_quad(LscSpec(2, 2, sigma), ctx), ref, 40)


def test_ls3_extended_omega_zero(ctx):
    with ctx.workdps():
        t = mpmath.pi / 6
        assert_digits(logsine.ls3_extended(t, 0, ctx), logsine.ls(3, 2 * t, ctx=ctx), 45)


@pytest.mark.parametrize("theta,omega", [("pi/6", "pi/6"), ("pi/5", "pi/7"), ("2pi/5", "pi/3")])
def test_ls3_extended_vs_quad(theta, omega, ctx):
    with ctx.workdps():
        th, om = logsine.parse_angle(theta), logsine.parse_angle(omega)
        v = logsine.ls3_extended(th, om, ctx)
        assert_digits(v, logsine.ls3_extended_quad(2 * th, 2 * om, ctx), 40)
        with mpmath.workdps(60):
            f = lambda s: (mpmath.log(abs(2 * mpmath.sin(s / 2)))  # noqa: E731
                           * mpmath.log(abs(2 * mpmath.sin((s + 2 * om) / 2))))
            pts = sorted({mpmath.mpf(0), 2 * th} | ({2 * mpmath.pi - 2 * om} if 2 * th > 2 * mpmath.pi - 2 * om else set()))
            ref = -mpmath.quad(f, pts)
        assert_digits(v, ref, 35)


def test_ls3_two_pi_is_dilog_measure(ctx):
    with ctx.workdps():
        v = -logsine.ls3_extended_quad(2 * mpmath.pi, mpmath.pi / 2, ctx) / (2 * mpmath.pi)
        assert_digits(v, mahler.dilog_measure(1, mpmath.mpc(0, 1), ctx), 45)
        assert_digits(v, oracles.mahler2_quad(1, mpmath.mpc(0, 1), 50), 40)


@pytest.mark.parametrize("theta,omega", [("pi/2", "pi/2"), ("pi", "pi/4")])
def test_ls3_extended_singular(theta, omega, ctx):
    with ctx.workdps():
        th, om = logsine.parse_angle(theta), logsine.parse_angle(omega)
        with pytest.raises(DomainError):
            logsine.ls3_extended(th, om, ctx)


def test_ls_pi3_examples(ctx):
    with ctx.workdps():
        pi = mpmath.pi
        t = pi / 3
        assert_digits(logsine.ls_pi3_closed(3, ctx), -7 * pi ** 3 / 108, 48)
        assert_digits(logsine.ls_pi3_closed(4, ctx),
                      pi * zeta(3, ctx) / 2 + mpmath.mpf(9) / 2 * polylog.clausen(4, t, ctx), 48)


@pytest.mark.parametrize("n", range(2, 9))
def test_ls_pi3_closed_vs_quad(n, ctx):
    with ctx.workdps():
        assert_digits(logsine.ls_pi3_closed(n, ctx), logsine.ls(n, mpmath.pi / 3, ctx=ctx), 40)


def test_ls_pi3_out_of_range(ctx):
    with pytest.raises(UnsupportedError):
        logsine.ls_pi3_closed(9, ctx)


def test_two_pi_over_three(ctx):
    with ctx.workdps():
        t = 2 * mpmath.pi / 3
        assert_digits(logsine.ls3_2pi3(ctx), logsine.ls(3, t, ctx=ctx), 45)
        assert_digits(logsine.ls4_2pi3(ctx), logsine.ls(4, t, ctx=ctx), 45)


def test_circle_constants_consistent(ctx):
    table = logsine.circle_constants(ctx)
    assert set(table) == {"Cl2(pi/3)", "Cl4(pi/3)", "Gl41(pi/3)", "Cl6(pi/3)", "Gl61(pi/3)",
                          "Cl611(pi/3)", "Gl21(2pi/3)", "Cl211(2pi/3)"}
    for name, entry in table.items():
        assert_digits(entry["ls"], entry["series"], 40)
    assert_digits(table["Cl2(pi/3)"]["ls"], frozen.val("cl2_pi3"), 45)


_ctx30 = make_context(30)


@settings(max_examples=15, deadline=None)
@given(a=st.floats(0.05, 6.0), b=st.floats(0.05, 6.0), n=st.integers(2, 4))
def test_additivity(a, b, n):
    lo, hi = sorted((a, b))
    with _ctx30.workdps():
        lo, hi = mpmath.mpf(lo), mpmath.mpf(hi)
        pts = [lo] + [p for p in (mpmath.pi / 3, mpmath.pi, 5 * mpmath.pi / 3) if lo < p < hi] + [hi]
        with mpmath.workdps(45):
            mid = -mpmath.quad(lambda t: mpmath.log(abs(2 * mpmath.sin(t / 2))) ** (n - 1), pts)
        total = logsine.ls(n, lo, ctx=_ctx30) + mid
        assert_digits(total, logsine.ls(n, hi, ctx=_ctx30), 25)

import threading

import mpmath
import pytest
from conftest import assert_digits
from frozen import FROZEN, val

from mahlerlog import mpcore
from mahlerlog.mpcore import (ConfigurationError, Context, DomainError, agree_digits, close,
                              fundamental_constant, make_context, to_decimal)


@pytest.mark.parametrize("d, work", [(50, 60), (1000, 1100), (1, 11), (10000, 11000), (101, 112)])
def test_guard_digit_rule(d, work):
    c = make_context(d)
    assert (c.target_digits, c.work_digits, c.guard_digits) == (d, work, work - d)


@pytest.mark.parametrize("bad", [0, -3, 10001, 2.5, True, "50"])
def test_make_context_rejects(bad):
    with pytest.raises(ConfigurationError):
        make_context(bad)


def test_context_invariant():
    with pytest.raises(ConfigurationError):
        Context(target_digits=50, work_digits=55)
    with mpmath.workdps(60):
        assert abs(make_context(30).tol * mpmath.mpf(10) ** 30 - 1) < mpmath.mpf(10) ** -35


def test_zeta2_is_pi_squared_over_6(ctx):
    with ctx.workdps():
        assert_digits(fundamental_constant("zeta(2)", ctx), mpmath.pi ** 2 / 6, 50)


def test_catalan_and_zeta3_against_oracles(ctx):
    assert_digits(fundamental_constant("catalan", ctx), val("catalan"), 50)
    assert_digits(fundamental_constant("zeta(3)", ctx), val("zeta3"), 50)


def test_log_constant(ctx):
    with ctx.workdps():
        assert_digits(fundamental_constant("log(3)", ctx), mpmath.log(3), 50)


def test_zeta_pole_and_bad_names(ctx):
    with pytest.raises(DomainError):
        fundamental_constant("zeta(1)", ctx)
    for bad in ("zeta(0)", "log(1)", "e", "zeta(x)"):
        with pytest.raises(ConfigurationError):
            fundamental_constant(bad, ctx)


def test_constants_are_memoized_and_identical(ctx):
    a = fundamental_constant("zeta(5)", ctx)
    b = fundamental_constant("zeta(5)", ctx)
    assert a is b


def test_cache_is_safe_under_threads():
    c = make_context(77)
    out = []

    def work():
        out.append(fundamental_constant("zeta(7)", c))

    ts = [threading.Thread(target=work) for _ in range(8)]
    for t in ts:
        t.start()
    for t in ts:
        t.join()
    assert len({id(v) for v in out}) == 1


BATTERY = ["pi", "catalan"] + [f"zeta({n})" for n in range(2, 12)] + [f"log({k})" for k in range(2, 10)]


def test_battery_has_twenty_constants():
    assert len(BATTERY) == 20


@pytest.mark.parametrize("name", BATTERY)
def test_precision_escalation(name):
    lo, hi = make_context(40), make_context(60)
    assert_digits(fundamental_constant(name, hi), fundamental_constant(name, lo), 40)


def test_agree_digits_and_close():
    with mpmath.workdps(60):
        a = mpmath.mpf(1) / 3
        assert agree_digits(a, a + mpmath.mpf(10) ** -30) in (29, 30)
        assert agree_digits(a, a, cap=50) == 50
        assert close(a, a + mpmath.mpf(10) ** -55, make_context(50))
        assert not close(a, a + mpmath.mpf(10) ** -45, make_context(50))


def test_to_decimal_is_exact_string():
    with mpmath.workdps(40):
        s = to_decimal(mpmath.mpf(1) / 7, 30)
    assert s.startswith("0.142857142857") and len(s.replace("0.", "", 1)) == 30
    assert "e" not in to_decimal(mpmath.mpf("1e-30"), 10)


def test_default_context():
    assert mpcore.DEFAULT_CONTEXT.target_digits == 50

"""A registry of numerical identities and an integer-relation finder.

Every :class:`IdentityRecord` evaluates two sides independently and reports
how many digits agree.  Records marked conjectural carry the tags ``?[1]`` to
``?[5]``; they are verified here and never used as a computation route
elsewhere in the package.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Sequence

import mpmath
from mpmath import mpf

from . import logsine, mahler, polylog, rho
from .mpcore import (Context, DomainError, PrecisionError, agree_digits, fundamental_constant,
                     make_context, resolve, to_decimal, zeta)
from .quad import quad

# -- shared building blocks -----------------------------------------------------


@lru_cache(maxsize=None)
def _cl(n: int, twelfths: int, ctx: Context):
    """Cl_n(k pi / 12) via multiple polylogarithm evaluation."""
    with ctx.workdps():
        return polylog.clausen(n, mpmath.pi * twelfths / 12, ctx)


def cl2(ctx):
    return _cl(2, 4, ctx)


def cl4(ctx):
    return _cl(4, 4, ctx)


@lru_cache(maxsize=None)
def _ls(n: int, num: int, den: int, ctx: Context):
    with ctx.workdps():
        return logsine.ls_quad(logsine.LsSpec(n, 0, mpmath.pi * num / den), ctx)


@lru_cache(maxsize=None)
def _mu(n: int, route: str, ctx: Context):
    return mahler.mu_n(n, route, ctx)


def re_li2(x):
    """Re Li_2(x) for real x."""
    return polylog.dilog_inversion(x) if x > 1 else mpmath.polylog(2, x)


def re_li21(x, ctx):
    """Re Li_{2,1}(x) for real 0 < x."""
    if x == 1:
        return zeta(3, ctx)
    if x > 1:
        return polylog.li21_reflection(1 / x, ctx)
    return polylog._li21(x, ctx)


def _theta_quad(f: Callable, lo, hi, ctx: Context):
    """Integrate f(theta) over [lo, hi], splitting at pi/6 where 4 sin^2 theta = 1."""
    p6 = mpmath.pi / 6
    pts = [lo] + ([p6] if lo < p6 < hi else []) + [hi]
    return quad(f, pts, ctx)


def _frac_pi(q: Fraction):
    return mpmath.pi * q.numerator / q.denominator


def _log2sin(t):
    return mpmath.log(2 * mpmath.sin(t))


def _rint_tail(ctx):
    """int_0^{pi/3} log^2(1 - 4 sin^2(t/2)) log(2 sin(t/2)) dt."""
    with ctx.workdps():
        p3 = mpmath.pi / 3

        def lower(t):
            return mpmath.log(2 * mpmath.cos(t) - 1) ** 2 * mpmath.log(2 * mpmath.sin(t / 2))

        def upper(s):
            # t = pi/3 - s; 2 cos t - 1 = 4 sin(pi/3 - s/2) sin(s/2)
            g = 4 * mpmath.sin(p3 - s / 2) * mpmath.sin(s / 2)
            return mpmath.log(g) ** 2 * mpmath.log(2 * mpmath.sin((p3 - s) / 2))

        return quad(lower, [0, p3 / 2], ctx) + quad(upper, [0, p3 / 2], ctx)


# -- records ------------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    lhs: Callable[[Context], mpf]
    rhs: Callable[[Context], mpf]
    formula: str
    status: str = "proven"  # or "conjectural"
    tag: str = ""
    min_digits: int = 40
    lhs_uses: frozenset = field(default_factory=frozenset)
    rhs_uses: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.min_digits < 30:
            raise ValueError("min_digits must be at least 30")
        if self.status not in ("proven", "conjectural"):
            raise ValueError(f"bad status {self.status!r}")

    @property
    def status_label(self) -> str:
        return f"conjectural {self.tag}" if self.status == "conjectural" else "proven"


REGISTRY: dict[str, IdentityRecord] = {}


def register(rec: IdentityRecord) -> IdentityRecord:
    if rec.id in REGISTRY:
        raise ValueError(f"duplicate identity id {rec.id!r}")
    REGISTRY[rec.id] = rec
    return rec


def _r(id, lhs, rhs, formula, lhs_uses, rhs_uses, status="proven", tag="", min_digits=40):
    register(IdentityRecord(id, lhs, rhs, formula, status, tag, min_digits,
                            frozenset(lhs_uses), frozenset(rhs_uses)))


F = mpf
PI = lambda: mpmath.pi  # noqa: E731


# mu_1, mu_2, mu_3, mu_4 -------------------------------------------------------------

_r("mu1-xy", lambda c: _mu(1, "fd", c), lambda c: 3 / (2 * PI()) * _ls(2, 2, 3, c),
   "mu_1(1+x+y) = 3/(2 pi) Ls_2(2pi/3)", {"mu_n_finite_diff"}, {"ls_quad"})
_r("mu1-cl2", lambda c: 3 / (2 * PI()) * _ls(2, 2, 3, c), lambda c: cl2(c) / PI(),
   "3/(2 pi) Ls_2(2pi/3) = Cl_2(pi/3)/pi", {"ls_quad"}, {"clausen"})
_r("mu2-ls", lambda c: _mu(2, "fd", c), lambda c: 3 / PI() * _ls(3, 2, 3, c) + PI() ** 2 / 4,
   "mu_2(1+x+y) = 3/pi Ls_3(2pi/3) + pi^2/4", {"mu_n_finite_diff"}, {"ls_quad"}, min_digits=45)
_r("mu2-dilog",
   lambda c: _mu(2, "rho", c),
   lambda c: PI() ** 2 / 36 + 2 / PI() * _theta_quad(lambda t: mpmath.polylog(2, 4 * mpmath.sin(t) ** 2),
                                                      0, PI() / 6, c),
   "mu_2(1+x+y) = pi^2/36 + 2/pi int_0^{pi/6} Li_2(4 sin^2 t) dt",
   {"mu_n_rho_quad"}, {"quad", "polylog"})
_r("mu3-eps",
   lambda c: PI() * _mu(3, "epsilon", c),
   lambda c: (15 * _ls(4, 2, 3, c) - 18 * logsine.lsc_quad(logsine.LscSpec(2, 3, PI() / 3), c)
              - 15 * cl4(c) - PI() ** 2 / 4 * cl2(c) - 17 * PI() * zeta(3, c)),
   "pi mu_3 = 15 Ls_4(2pi/3) - 18 Lsc_{2,3}(pi/3) - 15 Cl_4(pi/3) - pi^2/4 Cl_2(pi/3) - 17 pi zeta(3)",
   {"mu_n_epsilon"}, {"ls_quad", "lsc_quad", "clausen"})
_r("mu3-conj",
   lambda c: _mu(3, "rho", c),
   lambda c: (6 / PI() * _ls(4, 2, 3, c) - 9 / PI() * cl4(c) - PI() / 4 * cl2(c)
              - F(13) / 2 * zeta(3, c)),
   "mu_3(1+x+y) = 6/pi Ls_4(2pi/3) - 9/pi Cl_4(pi/3) - pi/4 Cl_2(pi/3) - 13/2 zeta(3)",
   {"mu_n_rho_quad"}, {"ls_quad", "clausen"}, "conjectural", "?[1]")
_r("lsc23-conj",
   lambda c: 12 * logsine.lsc_quad(logsine.LscSpec(2, 3, PI() / 3), c),
   lambda c: 6 * _ls(4, 2, 3, c) - 4 * cl4(c) - 7 * PI() * zeta(3, c),
   "12 Lsc_{2,3}(pi/3) = 6 Ls_4(2pi/3) - 4 Cl_4(pi/3) - 7 pi zeta(3)",
   {"lsc_quad"}, {"ls_quad", "clausen"}, "conjectural", "?[1]")
_r("lsc23-conj-ls",
   lambda c: 12 * logsine.lsc_quad(logsine.LscSpec(2, 3, PI() / 3), c),
   lambda c: 6 * _ls(4, 2, 3, c) - F(8) / 9 * _ls(4, 1, 3, c) - F(59) / 9 * PI() * zeta(3, c),
   "12 Lsc_{2,3}(pi/3) = 6 Ls_4(2pi/3) - 8/9 Ls_4(pi/3) - 59/9 pi zeta(3)",
   {"lsc_quad"}, {"ls_quad"}, "conjectural", "?[1]")


def _ti(k, c):
    return polylog.ti(k, 1 / mpmath.sqrt(3), c)


_r("lsc23ti-conj",
   lambda c: _ti(4, c),
   lambda c: (F(5) / 24 * _ls(4, 2, 3, c) + F(7) / 54 * _ls(4, 1, 3, c) - F(59) / 216 * PI() * zeta(3, c)
              - PI() * mpmath.log(3) ** 3 / 288 - mpmath.log(3) / 2 * _ti(3, c)
              - mpmath.log(3) ** 2 / 8 * _ti(2, c)),
   "Ti_4(1/sqrt3) = 5/24 Ls_4(2pi/3) + 7/54 Ls_4(pi/3) - 59/216 pi zeta(3) - pi log^3 3/288"
   " - 1/2 log3 Ti_3(1/sqrt3) - 1/8 log^2 3 Ti_2(1/sqrt3)",
   {"ti_4"}, {"ls_quad", "ti_3", "ti_2"}, "conjectural", "?[1]")
_r("lsc23-ti-form",
   lambda c: 12 * logsine.lsc_quad(logsine.LscSpec(2, 3, PI() / 3), c),
   lambda c: (_ls(4, 2, 3, c) - 4 * _ls(4, 1, 3, c) + PI() * mpmath.log(3) ** 3 / 12
              + 24 * _ti(4, c) + 12 * mpmath.log(3) * _ti(3, c) + 3 * mpmath.log(3) ** 2 * _ti(2, c)),
   "12 Lsc_{2,3}(pi/3) = Ls_4(2pi/3) - 4 Ls_4(pi/3) + pi log^3 3/12 + 24 Ti_4 + 12 log3 Ti_3 + 3 log^2 3 Ti_2"
   " (all Ti at 1/sqrt3)",
   {"lsc_quad"}, {"ls_quad", "ti_4", "ti_3", "ti_2"})


def _mu4_rhs(c):
    t2 = 2 * PI() / 3
    return (12 * _ls(5, 2, 3, c) - F(49) / 3 * _ls(5, 1, 3, c)
            + 81 * polylog.glaisher((4, 1), t2, c) + 3 * PI() ** 2 * polylog.glaisher((2, 1), t2, c)
            + 2 * zeta(3, c) * cl2(c) + PI() * cl2(c) ** 2 - F(29) / 90 * PI() ** 5)


_r("mu4-conj", lambda c: PI() * _mu(4, "rho", c), _mu4_rhs,
   "pi mu_4 = 12 Ls_5(2pi/3) - 49/3 Ls_5(pi/3) + 81 Gl_{4,1}(2pi/3) + 3 pi^2 Gl_{2,1}(2pi/3)"
   " + 2 zeta(3) Cl_2(pi/3) + pi Cl_2(pi/3)^2 - 29/90 pi^5",
   {"mu_n_rho_quad"}, {"ls_quad", "glaisher", "clausen"}, "conjectural", "?[5]")

# dilogarithmic integrals over [0, pi/2] -------------------------------------------


def _li2_log_int(inverse: bool, lo, hi, c):
    def f(t):
        x = 4 * mpmath.sin(t) ** 2
        return _log2sin(t) * re_li2(1 / x if inverse else x)
    return _theta_quad(f, lo, hi, c)


_r("z2", lambda c: 2 / PI() * _theta_quad(lambda t: re_li2(4 * mpmath.sin(t) ** 2), 0, PI() / 2, c) * 2,
   lambda c: 2 * zeta(2, c),
   "2/pi int_0^pi Re Li_2(4 sin^2 t) dt = 2 zeta(2)", {"quad", "polylog"}, {"zeta"})
_r("fed1",
   lambda c: _theta_quad(lambda t: re_li2(4 * mpmath.sin(t) ** 2) + re_li2(1 / (4 * mpmath.sin(t) ** 2)),
                         PI() / 6, PI() / 2, c),
   lambda c: F(5) / 54 * PI() ** 3,
   "int_{pi/6}^{pi/2} (Re Li_2(4 sin^2 t) + Li_2(1/(4 sin^2 t))) dt = 5/54 pi^3", {"quad", "polylog"}, set())
_r("pi6",
   lambda c: 3 / PI() * (_li2_log_int(False, 0, PI() / 6, c) + _li2_log_int(True, 0, PI() / 6, c)),
   lambda c: F(3) / 2 * zeta(3, c) - PI() / 2 * cl2(c) + 27 / (2 * PI()) * cl4(c),
   "3/pi int_0^{pi/6} log(2 sin t) (Li_2(4 sin^2 t) + Re Li_2(1/(4 sin^2 t))) dt"
   " = 3/2 zeta(3) - pi/2 Cl_2(pi/3) + 27/(2 pi) Cl_4(pi/3)", {"quad", "polylog"}, {"clausen"})
_r("pi6b",
   lambda c: 3 / PI() * (_li2_log_int(False, PI() / 6, PI() / 2, c) + _li2_log_int(True, PI() / 6, PI() / 2, c)),
   lambda c: 3 * zeta(3, c) + PI() / 2 * cl2(c) - 27 / (2 * PI()) * cl4(c),
   "3/pi int_{pi/6}^{pi/2} log(2 sin t) (Re Li_2(4 sin^2 t) + Li_2(1/(4 sin^2 t))) dt"
   " = 3 zeta(3) + pi/2 Cl_2(pi/3) - 27/(2 pi) Cl_4(pi/3)", {"quad", "polylog"}, {"clausen"})
_r("pi2a", lambda c: 3 / PI() * _li2_log_int(False, 0, PI() / 2, c),
   lambda c: F(7) / 2 * zeta(3, c) - PI() * cl2(c),
   "3/pi int_0^{pi/2} log(2 sin t) Re Li_2(4 sin^2 t) dt = 7/2 zeta(3) - pi Cl_2(pi/3)",
   {"quad", "polylog"}, {"clausen"}, "conjectural", "?[2]")
_r("pi2b", lambda c: 3 / PI() * _li2_log_int(True, 0, PI() / 2, c),
   lambda c: zeta(3, c) + PI() * cl2(c),
   "3/pi int_0^{pi/2} log(2 sin t) Re Li_2(1/(4 sin^2 t)) dt = zeta(3) + pi Cl_2(pi/3)",
   {"quad", "polylog"}, {"clausen"}, "conjectural", "?[2]")
_r("I3", lambda c: 3 / PI() * _li2_log_int(False, 0, PI() / 6, c),
   lambda c: F(7) / 6 * zeta(3, c) - 11 * PI() / 12 * cl2(c) + 5 / PI() * cl4(c),
   "I_3 = 3/pi int_0^{pi/6} log(2 sin t) Li_2(4 sin^2 t) dt = 7/6 zeta(3) - 11 pi/12 Cl_2(pi/3) + 5/pi Cl_4(pi/3)",
   {"quad", "polylog"}, {"clausen"}, "conjectural", "?[3]")
_r("mu3f", lambda c: 3 / PI() * _li2_log_int(True, PI() / 6, PI() / 2, c),
   lambda c: F(2) / 3 * zeta(3, c) + 7 * PI() / 12 * cl2(c) - 17 / (2 * PI()) * cl4(c),
   "3/pi int_{pi/6}^{pi/2} log(2 sin t) Li_2(1/(4 sin^2 t)) dt = 2/3 zeta(3) + 7pi/12 Cl_2(pi/3)"
   " - 17/(2 pi) Cl_4(pi/3)", {"quad", "polylog"}, {"clausen"}, "conjectural", "?[3]")

# Li_{2,1} integrals -------------------------------------------------------------------


def _li21_int(inverse: bool, lo, hi, c):
    def f(t):
        x = 4 * mpmath.sin(t) ** 2
        return re_li21(1 / x if inverse else x, c)
    return 2 / PI() * _theta_quad(f, lo, hi, c)


_r("mu36", lambda c: _li21_int(False, 0, PI() / 6, c) + _li21_int(True, 0, PI() / 6, c),
   lambda c: (zeta(3, c) - PI() * cl2(c) + 6 / PI() * cl4(c)) / 9,
   "2/pi int_0^{pi/6} (Li_{2,1}(4 sin^2 t) + Re Li_{2,1}(1/(4 sin^2 t))) dt"
   " = (zeta(3) - pi Cl_2(pi/3) + 6/pi Cl_4(pi/3))/9", {"quad", "polylog"}, {"clausen"})
_r("mu36b", lambda c: _li21_int(False, PI() / 6, PI() / 2, c) + _li21_int(True, PI() / 6, PI() / 2, c),
   lambda c: (2 * zeta(3, c) - 5 * PI() * cl2(c) - 6 / PI() * cl4(c)) / 9,
   "2/pi int_{pi/6}^{pi/2} (Re Li_{2,1}(4 sin^2 t) + Li_{2,1}(1/(4 sin^2 t))) dt"
   " = (2 zeta(3) - 5 pi Cl_2(pi/3) - 6/pi Cl_4(pi/3))/9", {"quad", "polylog"}, {"clausen"})
_r("rint", lambda c: _li21_int(False, 0, PI() / 6, c),
   lambda c: (F(20) / 27 * zeta(3, c) - 8 * PI() / 27 * cl2(c) + 4 / (9 * PI()) * cl4(c)
              + _rint_tail(c) / PI()),
   "2/pi int_0^{pi/6} Li_{2,1}(4 sin^2 t) dt = 20/27 zeta(3) - 8pi/27 Cl_2(pi/3) + 4/(9pi) Cl_4(pi/3)"
   " + 1/pi int_0^{pi/3} log^2(1 - 4 sin^2(t/2)) log(2 sin(t/2)) dt", {"quad", "polylog"}, {"clausen", "quad"})
_r("rintb", lambda c: _li21_int(False, 0, PI() / 2, c),
   lambda c: zeta(3, c) / 3 - 2 * PI() / 3 * cl2(c),
   "2/pi int_0^{pi/2} Re Li_{2,1}(4 sin^2 t) dt = zeta(3)/3 - 2pi/3 Cl_2(pi/3)", {"quad", "polylog"}, {"clausen"})
_r("ls4-2pi3-conj",
   lambda c: -_ls(4, 2, 3, c) / PI(),
   lambda c: (-F(37) / 54 * zeta(3, c) - 7 * PI() / 27 * cl2(c) - 7 / (9 * PI()) * cl4(c)
              + _rint_tail(c) / (2 * PI())),
   "-1/pi Ls_4(2pi/3) = -37/54 zeta(3) - 7pi/27 Cl_2(pi/3) - 7/(9pi) Cl_4(pi/3)"
   " + 1/(2pi) int_0^{pi/3} log^2(1 - 4 sin^2(t/2)) log(2 sin(t/2)) dt",
   {"ls_quad"}, {"clausen", "quad"}, "conjectural", "?[4]")
_r("mu3-split",
   lambda c: _mu(3, "fd", c),
   lambda c: (-F(43) / 18 * zeta(3, c) + 47 * PI() / 36 * cl2(c) - 13 / (3 * PI()) * cl4(c)
              - 3 / PI() * _rint_tail(c)),
   "mu_3 = -43/18 zeta(3) + 47pi/36 Cl_2(pi/3) - 13/(3pi) Cl_4(pi/3)"
   " - 3/pi int_0^{pi/3} log^2(1 - 4 sin^2(t/2)) log(2 sin(t/2)) dt",
   {"mu_n_finite_diff"}, {"clausen", "quad"}, "conjectural", "?[3]")

# log-sine values, Clausen symmetry, extended Ls_3 ------------------------------------

_r("ls4-2pi3-multi",
   lambda c: _ls(4, 2, 3, c), lambda c: logsine.ls4_2pi3(c),
   "Ls_4(2pi/3) = 31/18 pi zeta(3) + pi^2/12 Cl_2(2pi/3) - 3/2 Cl_4(2pi/3) + 6 Cl_{2,1,1}(2pi/3)",
   {"ls_quad"}, {"clausen"})
for _n in range(2, 9):
    _r(f"clausen-pi3-{_n}",
       (lambda n: lambda c: _cl(n, 4, c))(_n),
       (lambda n: lambda c: (F(1) / 2 ** (n - 1) + (-1) ** n) * _cl(n, 8, c))(_n),
       f"Cl_{_n}(pi/3) = (2^(1-{_n}) + (-1)^{_n}) Cl_{_n}(2pi/3)", {"clausen"}, {"clausen"})
for _n in range(2, 9):
    _r(f"ls-pi3-{_n}",
       (lambda n: lambda c: _ls(n, 1, 3, c))(_n),
       (lambda n: lambda c: logsine.ls_pi3_closed(n, c))(_n),
       f"Ls_{_n}(pi/3) quadrature = tabulated Clausen/Glaisher form", {"ls_quad"}, {"clausen", "glaisher"})
for _th, _om in ((Fraction(1, 6), Fraction(1, 6)), (Fraction(1, 5), Fraction(1, 7)), (Fraction(2, 5), Fraction(1, 3))):
    _r(f"ls3-ext-{_th.numerator}_{_th.denominator}-{_om.numerator}_{_om.denominator}",
       (lambda a, b: lambda c: logsine.ls3_extended(_frac_pi(a), _frac_pi(b), c))(_th, _om),
       (lambda a, b: lambda c: logsine.ls3_extended_quad(2 * _frac_pi(a), 2 * _frac_pi(b), c))(_th, _om),
       f"Ls_3(2 theta, 2 omega) reduction = quadrature at theta = {_th} pi, omega = {_om} pi",
       {"polylog", "ls_quad"}, {"quad"})
_r("ls3-ext-2pi",
   lambda c: -logsine.ls3_extended_quad(2 * PI(), PI() / 2, c) / (2 * PI()),
   lambda c: mahler.dilog_measure(1, mpmath.expj(PI() / 2), c),
   "-1/(2pi) Ls_3(2pi, pi/2) = mu(1 - x, 1 - i x)", {"quad"}, {"polylog"})

# Euler-number generating function -----------------------------------------------


def _euler_lhs(n):
    def f(c):
        N = 2 * n
        return mpmath.fsum((-1) ** k * mahler.mu_mn_symmetric(k, N - k, c)
                           / (mpmath.factorial(k) * mpmath.factorial(N - k)) for k in range(N + 1))
    return f


for _n in (1, 2, 3):
    _r(f"euler-{_n}", _euler_lhs(_n),
       (lambda n: lambda c: abs(mpmath.eulernum(2 * n)) * (PI() / 2) ** (2 * n) / mpmath.factorial(2 * n))(_n),
       f"sum_k (-1)^k mu_(k,{2 * _n}-k)(1-x,1+x) / (k! ({2 * _n}-k)!) = |E_{2 * _n}| (pi/2)^{2 * _n} / ({2 * _n})!",
       {"lsc_pi_closed"}, {"eulernum"})
    _r(f"euler-beta-{_n}",
       (lambda n: lambda c: abs(mpmath.eulernum(2 * n)) * (PI() / 2) ** (2 * n) / mpmath.factorial(2 * n))(_n),
       (lambda n: lambda c: 4 / PI() * mpmath.dirichlet(2 * n + 1, [0, 1, 0, -1]))(_n),
       f"|E_{2 * _n}| (pi/2)^{2 * _n} / ({2 * _n})! = 4/pi L_-4({2 * _n + 1})", {"eulernum"}, {"dirichlet"})

# Boyd's family -------------------------------------------------------------------------

_r("boyd-3", lambda c: mahler.boyd_mu(3, c),
   lambda c: 16 * fundamental_constant("catalan", c) / (3 * PI()),
   "mu(P_3) = 16 G / (3 pi)", {"boyd_mu"}, {"catalan"})
_r("boyd-m5", lambda c: mahler.boyd_mu(-5, c), lambda c: 20 / (3 * PI()) * cl2(c),
   "mu(P_-5) = 20/(3 pi) Cl_2(pi/3)", {"boyd_mu"}, {"clausen"})
_r("boyd-m1", lambda c: mahler.boyd_mu(-1, c), lambda c: mahler.boyd_mu_minus1(c),
   "mu(P_-1) = (1/pi)(1/2 B(1/4,1/4) 3F2(...) - 1/6 B(3/4,3/4) 3F2(...))", {"boyd_mu"}, {"hyp3f2"},
   min_digits=35)

# rho special values -----------------------------------------------------------------

_r("rho4-half",
   lambda c: rho.rho_evaluator(4, c).at_x(F(1) / 2),
   lambda c: (-F(7) / 16 * mpmath.log(2) ** 4 + F(3) / 16 * PI() ** 2 * mpmath.log(2) ** 2
              - F(39) / 8 * zeta(3, c) * mpmath.log(2) + F(13) / 192 * PI() ** 4
              - 6 * mpmath.polylog(4, F(1) / 2)),
   "rho_4(1/sqrt2) = -7/16 log^4 2 + 3/16 pi^2 log^2 2 - 39/8 zeta(3) log2 + 13/192 pi^4 - 6 Li_4(1/2)",
   {"rho_evaluator"}, {"polylog"})


# -- forms as originally printed --------------------------------------------------------
# Each disagrees with the corrected registry entry of the same name; kept so the
# discrepancy stays reproducible.  Never part of run_suite.

PRINTED: dict[str, IdentityRecord] = {}


def _printed(id, lhs_of, rhs, formula):
    base = REGISTRY[lhs_of]
    PRINTED[id] = IdentityRecord(id, base.lhs, rhs, formula, base.status, base.tag, base.min_digits,
                                 base.lhs_uses, base.rhs_uses)


_printed("I3-printed", "I3",
         lambda c: F(7) / 6 * zeta(3, c) - 11 * PI() / 12 * cl2(c) + 5 * cl4(c),
         "I_3 = 7/6 zeta(3) - 11 pi/12 Cl_2(pi/3) + 5 Cl_4(pi/3)")
_printed("ls4-2pi3-printed", "ls4-2pi3-conj",
         lambda c: (-F(37) / 54 * zeta(3, c) + 7 * PI() / 27 * cl2(c) - 7 / (9 * PI()) * cl4(c)
                    + _rint_tail(c) / (2 * PI())),
         "-1/pi Ls_4(2pi/3) = -37/54 zeta(3) + 7pi/27 Cl_2(pi/3) - 7/(9pi) Cl_4(pi/3) + 1/(2pi) int ...")
_printed("mu3-split-printed", "mu3-split",
         lambda c: (F(43) / 18 * zeta(3, c) - 47 * PI() / 36 * cl2(c) - 13 / (3 * PI()) * cl4(c)
                    + 2 / PI() * _rint_tail(c)),
         "mu_3 = 43/18 zeta(3) - 47pi/36 Cl_2(pi/3) - 13/(3pi) Cl_4(pi/3) + 2/pi int ...")
_printed("lsc23-ti-form-printed", "lsc23-ti-form",
         lambda c: (_ls(4, 2, 3, c) - 4 * _ls(4, 1, 3, c) - PI() * mpmath.log(3) ** 3 / 12
                    + 24 * _ti(4, c) + 12 * mpmath.log(3) * _ti(3, c) + 3 * mpmath.log(3) ** 2 * _ti(2, c)),
         "12 Lsc_{2,3}(pi/3) = Ls_4(2pi/3) - 4 Ls_4(pi/3) - pi log^3 3/12 + 24 Ti_4 + 12 log3 Ti_3 + 3 log^2 3 Ti_2")
_printed("rho4-half-printed", "rho4-half",
         lambda c: (F(7) / 16 * mpmath.log(2) ** 4 + F(3) / 16 * PI() ** 2 * mpmath.log(2) ** 2
                    - F(39) / 8 * zeta(3, c) * mpmath.log(2) + F(13) / 192 * PI() ** 4
                    - 6 * mpmath.polylog(4, F(1) / 2)),
         "rho_4(1/sqrt2) = 7/16 log^4 2 + 3/16 pi^2 log^2 2 - 39/8 zeta(3) log2 + 13/192 pi^4 - 6 Li_4(1/2)")


# -- evaluation ----------------------------------------------------------------------


@dataclass(frozen=True)
class Report:
    id: str
    status: str
    agree_digits: int
    passed: bool
    formula: str
    lhs: str
    rhs: str

    def as_json(self) -> dict:
        return {"id": self.id, "status": self.status, "agree_digits": self.agree_digits,
                "pass": self.passed, "formula": self.formula, "lhs": self.lhs, "rhs": self.rhs}


def check_identity(id: str, ctx: Context | None = None) -> Report:
    try:
        rec = REGISTRY[id]
    except KeyError:
        raise DomainError(f"unknown identity {id!r}") from None
    return _evaluate(rec, ctx)


def check_printed(id: str, ctx: Context | None = None) -> Report:
    """Evaluate a form from :data:`PRINTED` (expected to fail)."""
    try:
        rec = PRINTED[id]
    except KeyError:
        raise DomainError(f"unknown printed form {id!r}") from None
    return _evaluate(rec, ctx)


def _evaluate(rec: IdentityRecord, ctx: Context | None) -> Report:
    ctx = resolve(ctx)
    with ctx.workdps():
        a = rec.lhs(ctx)
        b = rec.rhs(ctx)
        digits = agree_digits(a, b, cap=ctx.work_digits)
        shown = ctx.target_digits
        return Report(rec.id, rec.status_label, digits, digits >= rec.min_digits, rec.formula,
                      to_decimal(a, shown), to_decimal(b, shown))


FILTERS = ("all", "proven", "conjectural")


def select(filter: str = "all") -> list[IdentityRecord]:
    if filter not in FILTERS:
        raise DomainError(f"filter must be one of {FILTERS}")
    return [r for r in REGISTRY.values() if filter == "all" or r.status == filter]


def run_suite(filter: str = "all", ctx: Context | None = None) -> list[Report]:
    return [check_identity(r.id, ctx) for r in select(filter)]


def suite_ok(reports: Iterable[Report]) -> bool:
    """True iff no proven identity failed (conjectural failures are reported, not fatal)."""
    return all(r.passed for r in reports if r.status == "proven")


def format_table(reports: Sequence[Report]) -> str:
    if not reports:
        return "(no identities)"
    w = max(len(r.id) for r in reports)
    lines = [f"{'id':<{w}}  {'status':<16} {'digits':>6}  result"]
    for r in reports:
        lines.append(f"{r.id:<{w}}  {r.status:<16} {r.agree_digits:>6}  {'pass' if r.passed else 'FAIL'}")
    return "\n".join(lines)


def format_json(reports: Sequence[Report]) -> str:
    return json.dumps([r.as_json() for r in reports], indent=2)


# -- PSLQ --------------------------------------------------------------------------------


@dataclass(frozen=True)
class RelationResult:
    """Outcome of an integer-relation search.

    ``coefficients`` is None when no relation was found; then every integer
    relation has Euclidean norm at least ``norm_bound``.
    """

    coefficients: tuple | None
    norm_bound: int
    residual: mpf | None
    iterations: int

    @property
    def found(self) -> bool:
        return self.coefficients is not None


def _normalize(rel: list[int]) -> tuple:
    g = 0
    for c in rel:
        g = math.gcd(g, abs(c))
    rel = [c // g for c in rel]
    for c in rel:
        if c:
            if c < 0:
                rel = [-x for x in rel]
            break
    return tuple(rel)


def pslq(values: Sequence, max_coeff: int, ctx: Context | None = None,
         max_iter: int = 100000) -> RelationResult:
    """Ferguson-Bailey PSLQ (one pair per iteration) with a norm-bound certificate."""
    ctx = resolve(ctx)
    n = len(values)
    if not 2 <= n <= 16:
        raise DomainError("pslq needs between 2 and 16 values")
    if max_coeff < 1:
        raise DomainError("max_coeff must be positive")
    need = math.ceil(n * math.log10(max_coeff + 1)) + 20
    if ctx.target_digits < need:
        raise PrecisionError(f"pslq with {n} values and max_coeff {max_coeff} needs about {need} digits; "
                             f"got {ctx.target_digits}")
    with ctx.workdps():
        x = [+mpmath.mpmathify(v) for v in values]
        if any(not isinstance(v, mpf) for v in x):
            raise DomainError("pslq works on real values only")
        scale = mpmath.sqrt(mpmath.fsum(v * v for v in x))
        if scale == 0:
            raise DomainError("all values are zero")
        tol = mpf(10) ** (-(ctx.target_digits - 10))
        for i, v in enumerate(x):
            if abs(v) < tol * scale:
                rel = [0] * n
                rel[i] = 1
                return RelationResult(tuple(rel), 1, abs(v), 0)
        y = [v / scale for v in x]
        s = [mpf(0)] * n
        acc = mpf(0)
        for k in range(n - 1, -1, -1):
            acc += y[k] ** 2
            s[k] = mpmath.sqrt(acc)
        H = [[mpf(0)] * (n - 1) for _ in range(n)]
        for i in range(n):
            for j in range(min(i + 1, n - 1)):
                if i == j:
                    H[i][j] = s[i + 1] / s[i]
                else:
                    H[i][j] = -y[i] * y[j] / (s[j] * s[j + 1])
        A = [[int(i == j) for j in range(n)] for i in range(n)]
        B = [[int(i == j) for j in range(n)] for i in range(n)]

        def reduce_rows(i_lo: int, i_hi: int, j_hi_fn):
            for i in range(i_lo, i_hi):
                for j in range(j_hi_fn(i), -1, -1):
                    if H[j][j] == 0:
                        continue
                    t = int(mpmath.nint(H[i][j] / H[j][j]))
                    if t == 0:
                        continue
                    y[j] += t * y[i]
                    for k in range(j + 1):
                        H[i][k] -= t * H[j][k]
                    for k in range(n):
                        A[i][k] -= t * A[j][k]
                        B[k][j] += t * B[k][i]

        reduce_rows(1, n, lambda i: i - 1)
        gamma = mpmath.sqrt(F(4) / 3)
        limit = mpf(10) ** (ctx.work_digits - 5)
        bound = mpf(0)
        for it in range(1, max_iter + 1):
            m = max(range(n - 1), key=lambda i: gamma ** (i + 1) * abs(H[i][i]))
            y[m], y[m + 1] = y[m + 1], y[m]
            A[m], A[m + 1] = A[m + 1], A[m]
            for row in B:
                row[m], row[m + 1] = row[m + 1], row[m]
            H[m], H[m + 1] = H[m + 1], H[m]
            if m < n - 2:
                t0 = mpmath.sqrt(H[m][m] ** 2 + H[m][m + 1] ** 2)
                t1, t2 = H[m][m] / t0, H[m][m + 1] / t0
                for i in range(m, n):
                    t3, t4 = H[i][m], H[i][m + 1]
                    H[i][m] = t1 * t3 + t2 * t4
                    H[i][m + 1] = -t2 * t3 + t1 * t4
            reduce_rows(m + 1, n, lambda i: min(i - 1, m + 1))
            hmax = max(abs(H[j][j]) for j in range(n - 1))
            bound = 1 / hmax if hmax else mpf(0)
            best = min(range(n), key=lambda i: abs(y[i]))
            if abs(y[best]) < tol:
                rel = _normalize([B[k][best] for k in range(n)])
                if max(abs(c) for c in rel) <= max_coeff:
                    res = abs(mpmath.fsum(c * v for c, v in zip(rel, x)))
                    if res <= tol * scale * 10:
                        return RelationResult(rel, int(bound), res, it)
            if bound > max_coeff * math.sqrt(n):
                return RelationResult(None, int(bound), None, it)
            if max(abs(a) for row in A for a in row) > limit:
                break
        return RelationResult(None, int(bound), None, max_iter)


# -- symbolic constants for PSLQ inputs ---------------------------------------------------

_SYMBOLS = {
    "pi": lambda c: +mpmath.pi,
    "zeta3": lambda c: zeta(3, c),
    "zeta5": lambda c: zeta(5, c),
    "catalan": lambda c: fundamental_constant("catalan", c),
    "cl2pi3": cl2,
    "cl4pi3": cl4,
    "log2": lambda c: mpmath.log(2),
    "log3": lambda c: mpmath.log(3),
}


def parse_value(text: str, ctx: Context | None = None) -> mpf:
    """A decimal string, a symbol (pi, zeta3, catalan, cl2pi3, ...) or a product like pi^2*cl2pi3."""
    ctx = resolve(ctx)
    with ctx.workdps():
        t = text.strip().lower().replace(" ", "")
        if not t:
            raise DomainError("empty value")
        out = mpf(1)
        for factor in t.split("*"):
            base, _, power = factor.partition("^")
            p = int(power) if power else 1
            if base in _SYMBOLS:
                v = _SYMBOLS[base](ctx)
            else:
                try:
                    v = mpmath.mpf(base)
                except (ValueError, TypeError):
                    raise DomainError(f"cannot parse value {factor!r}") from None
            out *= v ** p
        return out


def read_values(path: str, ctx: Context | None = None) -> list:
    """One value per line; '#' starts a comment."""
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                out.append(parse_value(line, ctx))
    return out


__all__ = [
    "IdentityRecord", "REGISTRY", "PRINTED", "Report", "check_printed", "RelationResult", "check_identity", "run_suite",
    "select", "suite_ok", "format_table", "format_json", "pslq", "parse_value", "read_values",
    "make_context",
]

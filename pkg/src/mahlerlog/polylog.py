"""Classical and multiple polylogarithms, Clausen and Glaisher functions.

Depth-one functions are delegated to :func:`mpmath.polylog`.  Multiple
polylogarithms go through :mod:`mahlerlog.iterint`: power series at 0 for
``|z| <= 1/2``, the log-expansion at 1 for ``|1 - z| <= 1/2`` and Taylor
continuation elsewhere in the closed unit disk.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import mpmath
from mpmath import mpf

from . import iterint
from .mpcore import Context, DomainError, UnsupportedError, resolve, zeta

HALF = mpf(1) / 2


@dataclass(frozen=True)
class MultiIndex:
    """Composition (a_1, ..., a_k) indexing Li_{a_1,...,a_k} (outermost first)."""

    entries: tuple

    def __post_init__(self):
        entries = tuple(int(a) for a in self.entries)
        if not entries:
            raise ValueError("a multi-index needs depth >= 1")
        if any(a < 1 for a in entries):
            raise ValueError(f"entries must be positive integers, got {entries}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, w: Union["MultiIndex", int, Iterable[int]]) -> "MultiIndex":
        if isinstance(w, MultiIndex):
            return w
        if isinstance(w, int):
            return cls((w,))
        return cls(tuple(w))

    @property
    def weight(self) -> int:
        return sum(self.entries)

    @property
    def depth(self) -> int:
        return len(self.entries)

    @property
    def admissible(self) -> bool:
        return self.entries[0] >= 2

    @property
    def letters(self) -> tuple:
        return iterint.letters_of(self.entries)

    def __str__(self):
        return ",".join(map(str, self.entries))


IndexLike = Union[MultiIndex, int, Sequence[int]]


def _num(z):
    z = mpmath.mpmathify(z)
    if isinstance(z, mpmath.mpc) and z.imag == 0:
        return z.real
    return z


# -- depth one ---------------------------------------------------------------

def li(k: int, z, ctx: Context | None = None):
    """Li_k(z) for |z| <= 1; for k = 2 also real z > 1 (upper-side value)."""
    ctx = resolve(ctx)
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"order must be a positive integer, got {k!r}")
    with ctx.workdps():
        z = _num(z)
        if k == 1 and z == 1:
            raise DomainError("Li_1(1) diverges")
        if abs(z) <= 1:
            return mpmath.polylog(k, z)
        if k == 2 and isinstance(z, mpf):
            return mpmath.mpc(dilog_inversion(z, ctx), mpmath.pi * mpmath.log(z))
        raise DomainError(f"Li_{k}(z) implemented for |z| <= 1 only (and real z > 1 when k = 2)")


def ti(k: int, x, ctx: Context | None = None):
    """Inverse tangent integral Ti_k(x) = sum (-1)^n x^(2n+1) / (2n+1)^k."""
    ctx = resolve(ctx)
    if not isinstance(k, int) or k < 2:
        raise DomainError(f"order must be an integer >= 2, got {k!r}")
    with ctx.workdps():
        x = mpmath.mpmathify(x)
        if abs(x) > 1:
            raise DomainError("Ti_k(x) needs |x| <= 1")
        if x == 0:
            return mpf(0)
        return mpmath.im(mpmath.polylog(k, mpmath.mpc(0, x)))


def dilog_inversion(alpha, ctx: Context | None = None):
    """Re Li_2(alpha) for real alpha > 1, from Li_2(1/alpha)."""
    ctx = resolve(ctx)
    with ctx.workdps():
        alpha = mpmath.mpmathify(alpha)
        if not isinstance(alpha, mpf) or alpha <= 1:
            raise DomainError("dilog_inversion needs real alpha > 1")
        la = mpmath.log(alpha)
        return 2 * zeta(2, ctx) - mpmath.polylog(2, 1 / alpha) - la * la / 2


# -- multiple polylogarithms -------------------------------------------------

def _multi_li_raw(letters, z, dps: int):
    """f_W(z) at working precision ``dps`` (caller guarantees |z| <= 1, z != 1)."""
    if abs(z) <= HALF:
        return iterint.values_at_small(letters, z, dps)[-1]
    if abs(1 - z) <= HALF:
        return iterint.values_near_one(letters, z, dps)[-1]
    start = z * HALF / abs(z)
    vals = iterint.values_at_small(letters, start, dps)
    return iterint.continue_path(letters, start, vals, z, dps)[-1]


def multi_li(w: IndexLike, z, ctx: Context | None = None):
    """Li_{a_1,...,a_k}(z) = sum_{n_1 > ... > n_k > 0} z^n_1 / (n_1^a_1 ... n_k^a_k)."""
    ctx = resolve(ctx)
    w = MultiIndex.of(w)
    with ctx.workdps():
        z = _num(z)
        r = abs(z)
        if r > 1:
            raise DomainError("multi_li is implemented on the closed unit disk only")
        if r == 1 and not w.admissible:
            raise DomainError(f"Li_{{{w}}} diverges on |z| = 1 unless a_1 >= 2")
        if z == 1:
            return mzv(w, ctx)
        if w.depth == 1:
            return mpmath.polylog(w.entries[0], z)
        dps = ctx.work_digits + 5
        with mpmath.workdps(dps):
            v = _multi_li_raw(w.letters, z, dps)
        v = +v
        if isinstance(z, mpf) and isinstance(v, mpmath.mpc):
            v = v.real
        return v


def mzv(w: IndexLike, ctx: Context | None = None) -> mpf:
    """Multiple zeta value zeta(a_1, ..., a_k) = Li_{a_1,...,a_k}(1)."""
    ctx = resolve(ctx)
    w = MultiIndex.of(w)
    if not w.admissible:
        raise DomainError(f"zeta({w}) diverges: a_1 must be >= 2")
    if w.depth == 1:
        return zeta(w.entries[0], ctx)
    with ctx.workdps():
        dps = ctx.work_digits + 5
        return +iterint.value_at_one(w.letters, dps)


def _unit_point(theta):
    if theta == 0 or theta == 2 * mpmath.pi:
        return mpf(1)
    if theta == mpmath.pi:
        return mpf(-1)
    return mpmath.expj(theta)


def _circle_value(w: MultiIndex, theta, ctx: Context):
    theta = mpmath.mpmathify(theta)
    if theta < 0 or theta > 2 * mpmath.pi:
        raise DomainError("theta must lie in [0, 2 pi]")
    if not w.admissible:
        if w.depth == 1:
            raise DomainError("Cl_1 / Gl_1 are the excluded -log|2 sin(theta/2)| branch")
        raise DomainError(f"index ({w}) is not admissible on the circle")
    z = _unit_point(theta)
    if w.depth == 1:
        return mpmath.mpc(mpmath.polylog(w.entries[0], z))
    return mpmath.mpc(multi_li(w, z, ctx))


def clausen(w: IndexLike, theta, ctx: Context | None = None) -> mpf:
    """Cl_w(theta): Im Li_w(e^(i theta)) for even weight, Re for odd weight."""
    ctx = resolve(ctx)
    w = MultiIndex.of(w)
    with ctx.workdps():
        v = _circle_value(w, theta, ctx)
        return v.imag if w.weight % 2 == 0 else v.real


def glaisher(w: IndexLike, theta, ctx: Context | None = None) -> mpf:
    """Gl_w(theta): Re Li_w(e^(i theta)) for even weight, Im for odd weight."""
    ctx = resolve(ctx)
    w = MultiIndex.of(w)
    with ctx.workdps():
        v = _circle_value(w, theta, ctx)
        return v.real if w.weight % 2 == 0 else v.imag


# -- closed reductions of weight <= 4 ------------------------------------------

def _li21(x, ctx):
    l1 = mpmath.log(1 - x)
    return (l1 * l1 * mpmath.log(x) / 2 + l1 * mpmath.polylog(2, 1 - x)
            - mpmath.polylog(3, 1 - x) + zeta(3, ctx))


def _li12(x, ctx):
    l1 = mpmath.log(1 - x)
    return (2 * mpmath.polylog(3, 1 - x) - l1 * mpmath.polylog(2, x)
            - 2 * l1 * mpmath.polylog(2, 1 - x) - l1 * l1 * mpmath.log(x) - 2 * zeta(3, ctx))


def _li22(t, ctx):
    l1 = mpmath.log(1 - t)
    lt = mpmath.log(t)
    li2 = mpmath.polylog(2, t)
    return (-l1 ** 4 / 12 + l1 ** 3 * lt / 3 - zeta(2, ctx) * l1 ** 2
            + 2 * l1 * mpmath.polylog(3, t) - 2 * zeta(3, ctx) * l1 - 2 * mpmath.polylog(4, t)
            - 2 * mpmath.polylog(4, t / (t - 1)) + 2 * mpmath.polylog(4, 1 - t)
            - 2 * zeta(4, ctx) + li2 * li2 / 2)


def _li31(t, ctx):
    li2 = mpmath.polylog(2, t)
    return (li2 * li2 / 2 - _li22(t, ctx)) / 2


def _li_ones(n, x):
    return (-1) ** n * mpmath.log(1 - x) ** n / mpmath.factorial(n)


def _li2_ones(n, x, ctx):
    """Li_{2,{1}_(n-1)}(x)."""
    l1 = mpmath.log(1 - x)
    s = zeta(n + 1, ctx)
    for m in range(n + 1):
        s -= (-1) ** (n - m) / mpmath.factorial(n - m) * l1 ** (n - m) * mpmath.polylog(m + 1, 1 - x)
    return s


def reduce_low_weight(w: IndexLike, x, ctx: Context | None = None) -> mpf:
    """Li_w(x), 0 < x < 1, from depth-one polylogarithms and logarithms only.

    Supported: (2,1), (1,2), (2,2), (3,1), (2,1,1), (1,...,1), (2,1,...,1).
    """
    ctx = resolve(ctx)
    w = MultiIndex.of(w)
    e = w.entries
    with ctx.workdps():
        x = mpmath.mpmathify(x)
        if not (0 < x < 1):
            raise DomainError("reduce_low_weight needs 0 < x < 1")
        if all(a == 1 for a in e):
            return _li_ones(len(e), x)
        if e == (1, 2):
            return _li12(x, ctx)
        if e == (2, 2):
            return _li22(x, ctx)
        if e == (3, 1):
            return _li31(x, ctx)
        if e == (2, 1):
            return _li21(x, ctx)
        if e[0] == 2 and all(a == 1 for a in e[1:]):
            return _li2_ones(len(e), x, ctx)
        raise UnsupportedError(f"no closed reduction for Li_{{{w}}}; use multi_li")


def li21_reflection(x, ctx: Context | None = None) -> mpf:
    """Re Li_{2,1}(1/x) for 0 < x < 1 from the inversion relation."""
    ctx = resolve(ctx)
    with ctx.workdps():
        x = mpmath.mpmathify(x)
        if not (0 < x < 1):
            raise DomainError("li21_reflection needs 0 < x < 1")
        lx = mpmath.log(x)
        rhs = (zeta(3, ctx) - lx ** 3 / 6 + mpmath.pi ** 2 * lx / 2
               - mpmath.polylog(2, x) * lx + mpmath.polylog(3, x))
        return rhs - _li21(x, ctx)

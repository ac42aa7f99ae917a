"""Working-precision contexts, tolerance helpers and memoized constants.

All numerics in the package run on :mod:`mpmath`.  A :class:`Context` pins the
number of decimal digits a caller wants (``target_digits``) and the digits the
computation actually carries (``work_digits``); every public routine takes one
and evaluates inside :func:`Context.workdps`.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Union

import mpmath
from mpmath import mpc, mpf

MPReal = mpf
MPComplex = mpc
Number = Union[mpf, mpc]

MAX_DIGITS = 10000


class ConfigurationError(ValueError):
    """Invalid precision configuration."""


class DomainError(ValueError):
    """Argument outside the domain where an operation is defined."""


class UnsupportedError(ValueError):
    """Requested case is outside the supported (tabulated) range."""


class PrecisionError(RuntimeError):
    """The precision budget is insufficient for the requested accuracy."""


@dataclass(frozen=True)
class Context:
    target_digits: int
    work_digits: int

    def __post_init__(self):
        if self.work_digits < self.target_digits + 10:
            raise ConfigurationError("work_digits must exceed target_digits by at least 10")

    @property
    def guard_digits(self) -> int:
        return self.work_digits - self.target_digits

    @property
    def tol(self) -> mpf:
        with mpmath.workdps(self.work_digits):
            return mpf(10) ** (-self.target_digits)

    def workdps(self):
        return mpmath.workdps(self.work_digits)

    def escalate(self, extra: int) -> "Context":
        """A context with ``extra`` more target digits (same guard policy)."""
        return make_context(self.target_digits + extra)


def make_context(target_digits: int) -> Context:
    if not isinstance(target_digits, int) or isinstance(target_digits, bool):
        raise ConfigurationError(f"target_digits must be an integer, got {target_digits!r}")
    if not 1 <= target_digits <= MAX_DIGITS:
        raise ConfigurationError(f"target_digits must lie in [1, {MAX_DIGITS}], got {target_digits}")
    guard = max(10, math.ceil(0.1 * target_digits))
    return Context(target_digits=target_digits, work_digits=target_digits + guard)


DEFAULT_CONTEXT = make_context(50)


def resolve(ctx: Context | None) -> Context:
    return DEFAULT_CONTEXT if ctx is None else ctx


# -- constants --------------------------------------------------------------

_cache: dict[tuple[str, int], mpf] = {}
_cache_lock = threading.Lock()


def _parse_constant(name: str) -> tuple[str, int | None]:
    name = name.strip().lower().replace(" ", "")
    for head in ("zeta", "log"):
        if name.startswith(head):
            arg = name[len(head):].strip("()")
            if not arg.isdigit():
                raise ConfigurationError(f"malformed constant name {name!r}")
            return head, int(arg)
    if name in ("pi", "catalan"):
        return name, None
    raise ConfigurationError(f"unknown constant {name!r}")


def fundamental_constant(name: str, ctx: Context | None = None) -> mpf:
    """pi, catalan, zeta(n) for n >= 2, or log(k) for k >= 2.

    Values are cached per process, keyed by (name, work_digits).
    """
    ctx = resolve(ctx)
    head, arg = _parse_constant(name)
    if head == "zeta" and arg == 1:
        raise DomainError("zeta(1) is a pole")
    if head == "zeta" and arg < 2 or head == "log" and arg < 2:
        raise ConfigurationError(f"{name}: argument must be >= 2")
    key = (head if arg is None else f"{head}({arg})", ctx.work_digits)
    with _cache_lock:
        hit = _cache.get(key)
    if hit is not None:
        return hit
    with ctx.workdps():
        if head == "pi":
            value = +mpmath.pi
        elif head == "catalan":
            value = +mpmath.catalan
        elif head == "zeta":
            value = mpmath.zeta(arg)
        else:
            value = mpmath.log(arg)
    with _cache_lock:
        return _cache.setdefault(key, value)


def pi(ctx: Context | None = None) -> mpf:
    return fundamental_constant("pi", ctx)


def zeta(n: int, ctx: Context | None = None) -> mpf:
    return fundamental_constant(f"zeta({n})", ctx)


# -- comparisons ------------------------------------------------------------

def agree_digits(a: Number, b: Number, cap: int | None = None) -> int:
    """Number of matching decimal digits, measured against max(1, |a|)."""
    diff = abs(a - b)
    scale = max(abs(a), mpf(1))
    if diff == 0:
        return cap if cap is not None else mpmath.mp.dps
    digits = int(mpmath.floor(-mpmath.log10(diff / scale)))
    digits = max(digits, 0)
    return min(digits, cap) if cap is not None else digits


def close(a: Number, b: Number, ctx: Context | None = None, digits: int | None = None) -> bool:
    ctx = resolve(ctx)
    with ctx.workdps():
        need = ctx.target_digits if digits is None else digits
        return abs(a - b) <= mpf(10) ** (-need) * max(abs(a), mpf(1))


def to_decimal(x: Number, digits: int) -> str:
    """Decimal string with ``digits`` significant digits (no binary floats)."""
    if isinstance(x, mpc):
        return f"{to_decimal(x.real, digits)}{'+' if x.imag >= 0 else '-'}{to_decimal(abs(x.imag), digits)}j"
    return mpmath.nstr(x, digits, strip_zeros=False, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)

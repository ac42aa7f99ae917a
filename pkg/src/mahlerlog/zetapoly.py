"""Exact polynomials in pi and odd zeta values with rational coefficients.

Even zeta values are folded into powers of pi via Bernoulli numbers, so every
closed form produced here is canonical: a map from monomials
``pi^e0 * zeta(3)^e1 * zeta(5)^e2 * ...`` to :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Tuple

import mpmath

from .mpcore import Context, fundamental_constant, resolve

# generator slots: pi, zeta(3), zeta(5), ..., zeta(23)
ODD_ZETAS = tuple(range(3, 25, 2))
NGEN = 1 + len(ODD_ZETAS)

Monomial = Tuple[int, ...]


def _unit(slot: int, power: int = 1) -> Monomial:
    e = [0] * NGEN
    e[slot] = power
    return tuple(e)


ONE: Monomial = (0,) * NGEN


class ZetaPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Monomial, Fraction] | None = None):
        self.terms = {m: Fraction(c) for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def const(cls, c) -> "ZetaPoly":
        return cls({ONE: Fraction(c)})

    @classmethod
    def pi(cls, power: int = 1) -> "ZetaPoly":
        return cls({_unit(0, power): Fraction(1)})

    @classmethod
    def zeta(cls, n: int) -> "ZetaPoly":
        if n < 2:
            raise ValueError("zeta(n) needs n >= 2")
        if n % 2 == 0:
            return even_zeta(n)
        return cls({_unit(ODD_ZETAS.index(n) + 1): Fraction(1)})

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return ZetaPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ZetaPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ZetaPoly({m: c * other for m, c in self.terms.items()})
        other = _coerce(other)
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return ZetaPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (Fraction(1) / Fraction(other))

    def __eq__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def weight(self) -> int | None:
        """Common weight of all monomials, or None when mixed."""
        ws = {m[0] + sum(k * e for k, e in zip(ODD_ZETAS, m[1:])) for m in self.terms}
        return ws.pop() if len(ws) == 1 else None

    def evaluate(self, ctx: Context | None = None):
        ctx = resolve(ctx)
        with ctx.workdps():
            gens = [fundamental_constant("pi", ctx)] + [fundamental_constant(f"zeta({k})", ctx) for k in ODD_ZETAS]
            total = mpmath.mpf(0)
            for m, c in sorted(self.terms.items()):
                term = mpmath.mpf(c.numerator) / c.denominator
                for g, e in zip(gens, m):
                    if e:
                        term *= g ** e
                total += term
            return total

    def __repr__(self):
        return f"ZetaPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda t: (-t[0][0], t[0])):
            factors = []
            if m[0]:
                factors.append("pi" if m[0] == 1 else f"pi^{m[0]}")
            for k, e in zip(ODD_ZETAS, m[1:]):
                if e:
                    factors.append(f"zeta({k})" if e == 1 else f"zeta({k})^{e}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _coerce(x) -> ZetaPoly:
    if isinstance(x, ZetaPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return ZetaPoly.const(x)
    raise TypeError(f"cannot combine ZetaPoly with {type(x).__name__}")


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    p, q = mpmath.bernfrac(n)
    return Fraction(int(p), int(q))


@lru_cache(maxsize=None)
def even_zeta(n: int) -> ZetaPoly:
    """zeta(2k) = (-1)^(k+1) B_2k (2 pi)^2k / (2 (2k)!)."""
    k = n // 2
    c = (-1) ** (k + 1) * bernoulli(n) * Fraction(2 ** n, 2 * factorial(n))
    return ZetaPoly({_unit(0, n): c})


# -- truncated power series in one or two variables --------------------------

Series = Dict[Tuple[int, int], ZetaPoly]


def _series_mul(a: Series, b: Series, max_deg: int) -> Series:
    out: Series = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            if i1 + j1 + i2 + j2 > max_deg:
                continue
            key = (i1 + i2, j1 + j2)
            out[key] = out[key] + c1 * c2 if key in out else c1 * c2
    return out


def exp_of_homogeneous(log_parts: Dict[int, Series], max_deg: int) -> Series:
    """exp(sum_d L_d) where L_d is homogeneous of total degree d >= 1.

    Uses E_d = (1/d) sum_{j=1}^d j L_j E_{d-j}.
    """
    graded = {0: {(0, 0): ZetaPoly.const(1)}}
    for d in range(1, max_deg + 1):
        acc: Series = {}
        for j in range(1, d + 1):
            if j not in log_parts:
                continue
            prod = _series_mul({k: v * j for k, v in log_parts[j].items()}, graded[d - j], max_deg)
            for k, v in prod.items():
                acc[k] = acc[k] + v if k in acc else v
        graded[d] = {k: v / d for k, v in acc.items() if not v.is_zero()}
    out: Series = {}
    for part in graded.values():
        out.update(part)
    return out

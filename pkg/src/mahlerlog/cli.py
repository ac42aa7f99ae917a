"""Command-line front end: ``logsine <verb> ...``.

Every number is printed as a decimal string.  JSON output carries a
``digits_correct`` field next to each value.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

import mpmath

from . import logsine, mahler, polylog, relations, rho
from .mpcore import (ConfigurationError, Context, DomainError, PrecisionError, UnsupportedError,
                     make_context, to_decimal)

MIN_DIGITS, MAX_DIGITS = 10, 2000
ENV_DIGITS = "LOGSINE_DIGITS"


class UsageError(Exception):
    pass


def _digits_arg(text: str) -> int:
    try:
        d = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"digits must be an integer, got {text!r}") from None
    if not MIN_DIGITS <= d <= MAX_DIGITS:
        raise argparse.ArgumentTypeError(f"digits must lie in [{MIN_DIGITS}, {MAX_DIGITS}]")
    return d


def _default_digits() -> int:
    raw = os.environ.get(ENV_DIGITS)
    if raw is None:
        return 50
    try:
        return _digits_arg(raw)
    except argparse.ArgumentTypeError as exc:
        raise UsageError(f"{ENV_DIGITS}: {exc}") from None


def _index(text: str) -> tuple:
    try:
        return tuple(int(a) for a in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"multi-index must look like 2,1,1; got {text!r}") from None


def _number(text: str, ctx: Context):
    with ctx.workdps():
        try:
            return relations.parse_value(text, ctx)
        except DomainError:
            try:
                return mpmath.mpc(complex(text.replace("i", "j")))
            except ValueError:
                raise UsageError(f"cannot parse number {text!r}") from None


def _angle(text: str, ctx: Context):
    with ctx.workdps():
        try:
            return logsine.parse_angle(text)
        except (ValueError, TypeError):
            raise UsageError(f"cannot parse angle {text!r}") from None


# -- output -----------------------------------------------------------------------------


def _value_record(label: str, value, ctx: Context, **extra) -> dict:
    rec = {"quantity": label, "value": to_decimal(value, ctx.target_digits),
           "digits_correct": ctx.target_digits}
    rec.update(extra)
    return rec


def _emit(records: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        payload = records[0] if len(records) == 1 else records
        out.write(json.dumps(payload, indent=2) + "\n")
        return
    for r in records:
        meta = "".join(f"  [{k}={r[k]}]" for k in r if k not in ("quantity", "value", "digits_correct"))
        out.write(f"{r['quantity']} = {r['value']}  ({r['digits_correct']} digits){meta}\n")


# -- verbs --------------------------------------------------------------------------------


def cmd_ls(a, ctx):
    sigma = _angle(a.sigma, ctx)
    v = logsine.ls(a.n, sigma, k=a.k, ctx=ctx)
    name = f"Ls_{a.n}({a.sigma})" if a.k == 0 else f"Ls_{a.n}^({a.k})({a.sigma})"
    return [_value_record(name, v, ctx)]


def cmd_lsc(a, ctx):
    sigma = _angle(a.sigma, ctx)
    v = logsine.lsc_quad(logsine.LscSpec(a.m, a.n, sigma), ctx)
    return [_value_record(f"Lsc_{{{a.m},{a.n}}}({a.sigma})", v, ctx)]


def cmd_polylog(a, ctx):
    x = _number(a.x, ctx)
    v = polylog.multi_li(a.w, x, ctx)
    label = ",".join(map(str, a.w))
    return [_value_record(f"Li_{{{label}}}({a.x})", v, ctx)]


def cmd_clausen(a, ctx):
    theta = _angle(a.theta, ctx)
    fn = polylog.glaisher if a.glaisher else polylog.clausen
    label = ",".join(map(str, a.w))
    return [_value_record(f"{'Gl' if a.glaisher else 'Cl'}_{{{label}}}({a.theta})", fn(a.w, theta, ctx), ctx)]


def cmd_rho(a, ctx):
    alpha = _number(a.alpha, ctx)
    return [_value_record(f"rho_{a.n}({a.alpha})", rho.rho(a.n, alpha, ctx), ctx)]


def cmd_mahler(a, ctx):
    if a.what == "mu":
        v = mahler.mu_n(a.n, a.route, ctx)
        return [_value_record(f"mu_{a.n}(1+x+y)", v, ctx, route=a.route)]
    if a.what == "boyd":
        c = _number(a.c, ctx)
        return [_value_record(f"mu(P_{a.c})", mahler.boyd_mu(c, ctx), ctx)]
    if a.what == "deninger":
        return [_value_record("mu(1+x+1/x+y+1/y)", mahler.deninger_measure(ctx), ctx)]
    if a.what == "symmetric":
        return [_value_record(f"mu_{{{a.m},{a.n}}}(1-x,1+x)", mahler.mu_mn_symmetric(a.m, a.n, ctx), ctx)]
    if a.what == "w3":
        s = _number(a.s, ctx)
        return [_value_record(f"W_3({a.s})", mahler.w3(s, ctx), ctx)]
    raise UsageError(f"unknown mahler quantity {a.what!r}")


def cmd_identity(a, ctx, out, fmt):
    if a.action == "list":
        recs = relations.select(a.filter)
        if fmt == "json":
            out.write(json.dumps([{"id": r.id, "status": r.status_label, "formula": r.formula}
                                  for r in recs], indent=2) + "\n")
        else:
            for r in recs:
                out.write(f"{r.id:<28} {r.status_label:<17} {r.formula}\n")
        return 0
    if a.action == "check":
        if not a.id:
            raise UsageError("identity check needs an id")
        reports = [relations.check_identity(a.id, ctx)]
    else:
        reports = relations.run_suite(a.filter, ctx)
    out.write((relations.format_json(reports) if fmt == "json" else relations.format_table(reports)) + "\n")
    if a.action == "check":
        return 0 if reports[0].passed else 1
    return 0 if relations.suite_ok(reports) else 1


def _pslq_inputs(spec: str, ctx: Context) -> list:
    if spec.startswith("@"):
        try:
            return relations.read_values(spec[1:], ctx)
        except OSError as exc:
            raise UsageError(f"cannot read {spec[1:]!r}: {exc.strerror}") from None
    return [relations.parse_value(t, ctx) for t in spec.split(",")]


def cmd_pslq(a, ctx, out, fmt):
    values = _pslq_inputs(a.values, ctx)
    res = relations.pslq(values, a.max_coeff, ctx)
    if fmt == "json":
        out.write(json.dumps({
            "relation": list(res.coefficients) if res.found else None,
            "norm_bound": res.norm_bound,
            "residual": to_decimal(res.residual, 5) if res.found else None,
            "iterations": res.iterations,
        }, indent=2) + "\n")
    elif res.found:
        out.write(" ".join(map(str, res.coefficients)) + "\n")
    else:
        out.write(f"none (every relation has norm >= {res.norm_bound})\n")
    return 0


def cmd_table(a, ctx):
    rows = []
    if a.which == "mu":
        for n in range(1, 9):
            route = a.route
            if route == "epsilon" and n > 6:
                route = "fd"
            t0 = time.perf_counter()
            v = mahler.mu_n(n, route, ctx)
            rows.append(_value_record(f"mu_{n}", v, ctx, route=route,
                                      seconds=f"{time.perf_counter() - t0:.2f}"))
    else:
        for n in range(1, 9):
            rows.append(_value_record(f"Ls_{n}(pi)", logsine.ls_pi_closed(n, ctx), ctx, source="closed form"))
    return rows


# -- parser ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--digits", type=_digits_arg, default=None,
                        help=f"target digits in [{MIN_DIGITS}, {MAX_DIGITS}] (default 50 or ${ENV_DIGITS})")
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = _Parser(prog="logsine", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("ls", parents=[common], help="generalized log-sine integral Ls_n^(k)(sigma)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, default=0)
    s.add_argument("--sigma", default="pi", help="angle, e.g. pi, 2pi/3, 0.5")

    s = sub.add_parser("lsc", parents=[common], help="log-sine-cosine integral Lsc_{m,n}(sigma)")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--sigma", default="pi")

    s = sub.add_parser("polylog", parents=[common], help="multiple polylogarithm Li_w(x)")
    s.add_argument("--w", type=_index, required=True, help="index such as 2,1")
    s.add_argument("--x", required=True)

    s = sub.add_parser("clausen", parents=[common], help="Clausen or Glaisher value at theta")
    s.add_argument("--w", type=_index, required=True)
    s.add_argument("--theta", required=True)
    s.add_argument("--glaisher", action="store_true")

    s = sub.add_parser("rho", parents=[common], help="rho_n(alpha)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--alpha", required=True)

    s = sub.add_parser("mahler", parents=[common], help="Mahler measures")
    s.add_argument("what", choices=("mu", "boyd", "deninger", "symmetric", "w3"))
    s.add_argument("--n", type=int, default=1)
    s.add_argument("--m", type=int, default=1)
    s.add_argument("--route", choices=sorted(mahler.MU_ROUTES), default="rho")
    s.add_argument("--c", default="3", help="parameter of Boyd's family")
    s.add_argument("--s", default="0", help="argument of W_3")

    s = sub.add_parser("identity", parents=[common], help="identity registry")
    s.add_argument("action", choices=("run", "check", "list"))
    s.add_argument("id", nargs="?")
    s.add_argument("--filter", choices=relations.FILTERS, default="all")

    s = sub.add_parser("pslq", parents=[common], help="integer relation search")
    s.add_argument("--values", required=True, help="@file or comma-separated values/constants")
    s.add_argument("--max-coeff", type=int, default=10 ** 6)

    s = sub.add_parser("table", parents=[common], help="tables of mu_n(1+x+y) or Ls_n(pi)")
    s.add_argument("which", choices=("mu", "lspi"))
    s.add_argument("--route", choices=sorted(mahler.MU_ROUTES), default="fd")
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        a = build_parser().parse_args(argv)
        ctx = make_context(a.digits if a.digits is not None else _default_digits())
        fmt = a.format
        if a.verb == "identity":
            return cmd_identity(a, ctx, out, fmt)
        if a.verb == "pslq":
            return cmd_pslq(a, ctx, out, fmt)
        handler = {"ls": cmd_ls, "lsc": cmd_lsc, "polylog": cmd_polylog, "clausen": cmd_clausen,
                   "rho": cmd_rho, "mahler": cmd_mahler, "table": cmd_table}[a.verb]
        _emit(handler(a, ctx), fmt, out)
        return 0
    except UsageError as exc:
        sys.stderr.write(f"logsine: error: {exc}\n")
        return 2
    except (DomainError, UnsupportedError, ConfigurationError, PrecisionError,
            rho.ResourceError, ValueError, ZeroDivisionError) as exc:
        sys.stderr.write(f"logsine: {type(exc).__name__}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())

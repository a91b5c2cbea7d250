"""Command-line entry point.

Exit status: 0 on success, 2 on usage errors, 1 on computation errors or a
failing ``verify`` run. Results go to stdout, diagnostics to stderr. The
default output format can be set with the EPOLY_FORMAT environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import charvar as cv
from .partitions import enum_partitions, enum_rect_partitions, fibers_of_glue
from .plethystic import pexp, plog, sym_series
from .polycore import Poly2, PolyX, TruncSeries
from .verify import DEFAULT_SEED, SUITES, run_suite

FORMATS = ("text", "json", "latex")
GROUPS = ("free", "surface", "nonorientable", "torusknot", "freeabelian", "abelianization")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _default_format() -> str:
    fmt = os.environ.get("EPOLY_FORMAT", "text")
    return fmt if fmt in FORMATS else "text"


def _frac(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def render_poly(p, fmt: str) -> str:
    if fmt == "json":
        return _dump(p.to_json())
    if fmt == "latex":
        return p.to_latex()
    return p.to_text()


# -- argument helpers --------------------------------------------------------------------


def _add_group_args(p: argparse.ArgumentParser):
    p.add_argument("--group", required=True, choices=GROUPS)
    p.add_argument("--rank", type=int, help="rank for free, freeabelian and abelianization groups")
    p.add_argument("--genus", type=int, help="genus for surface and nonorientable groups")
    p.add_argument("--knot", help="torus knot type A,B")
    p.add_argument("--torsion", type=int, default=1, help="torsion order N for abelianization groups")


def _add_format(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=FORMATS, default=None)


def group_from_args(args) -> cv.GroupSpec:
    def need(name):
        value = getattr(args, name)
        if value is None:
            raise UsageError(f"--group {args.group} requires --{name}")
        return value

    try:
        if args.group == "free":
            return cv.FreeGroup(need("rank"))
        if args.group == "freeabelian":
            return cv.FreeAbelian(need("rank"))
        if args.group == "abelianization":
            return cv.AbelianizationOnly(need("rank"), args.torsion)
        if args.group == "surface":
            return cv.SurfaceGroup(need("genus"))
        if args.group == "nonorientable":
            return cv.NonOrientable(need("genus"))
        knot = need("knot")
        try:
            a, b = (int(s) for s in knot.split(","))
        except ValueError:
            raise UsageError(f"--knot expects A,B, got {knot!r}") from None
        return cv.TorusKnot(a, b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_stratum(text: str) -> cv.StratumLabel:
    try:
        return cv.StratumLabel.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"{exc}; expected full, irr, abelian or partition=SPEC (e.g. partition=1,1,2)"
        ) from None


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _read_series(path: str, order: int | None) -> TruncSeries:
    """A series file with an "order" is truncated data; without one it is a polynomial in t."""
    data = _read_json(path)
    try:
        coeffs = [Poly2.from_json(c) for c in data["coeffs"]]
        known = data.get("order")
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{path}: not a series ({exc})") from None
    if known is None:
        if order is None:
            order = len(coeffs) - 1
        if len(coeffs) > order + 1 and any(coeffs[order + 1 :]):
            print(f"warning: dropping terms above t^{order}", file=sys.stderr)
        return TruncSeries(coeffs, order)
    series = TruncSeries(coeffs, known)
    if order is None or order == known:
        return series
    if order > known:
        raise UsageError(f"{path} is only known through t^{known}; cannot use --order {order}")
    return series.truncate(order)


# -- subcommands ------------------------------------------------------------------------------


def cmd_epoly(args, fmt):
    spec = group_from_args(args)
    print(render_poly(cv.epoly(spec, args.n, args.stratum), fmt))


def cmd_series(args, fmt):
    spec = group_from_args(args)
    b = cv.irreducible_tower(spec, args.max_n)
    if args.kind == "irr":
        series = TruncSeries([Poly2.zero()] + [p.to_poly2() for p in b], args.max_n)
    else:
        series = cv.assemble_full_series(b, args.max_n)
    if fmt == "json":
        print(_dump(series.to_json()))
        return
    for n in range(1, args.max_n + 1):
        p = series.coeff(n).to_x_form()
        if fmt == "latex":
            print(f"t^{{{n}}}: {p.to_latex()}")
        else:
            print(f"t^{n}: {p.to_text()}")


def cmd_strata(args, fmt):
    spec = group_from_args(args)
    parts = cv.strata(spec, args.n)
    total = sum(parts.values(), PolyX.zero())
    if fmt == "json":
        rows = [{"partition": str(m), "epoly": p.to_json()} for m, p in parts.items()]
        rows.append({"partition": "total", "epoly": total.to_json()})
        print(_dump(rows))
        return
    for m, p in list(parts.items()) + [("total", total)]:
        print(f"{m}: {render_poly(p, fmt)}")


def cmd_partitions(args, fmt):
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    if args.fibers:
        fibers = fibers_of_glue(args.n)
        if fmt == "json":
            print(_dump([{"partition": m.to_json(), "fiber": [r.to_json() for r in f]} for m, f in fibers.items()]))
        else:
            for m, f in fibers.items():
                print(f"{m}: " + " ".join(str(r) for r in f))
        return
    items = enum_rect_partitions(args.n) if args.rectangular else enum_partitions(args.n)
    if fmt == "json":
        print(_dump([p.to_json() for p in items]))
    else:
        for p in items:
            print(p)


def _print_series(s: TruncSeries, fmt: str):
    if fmt == "json":
        print(_dump(s.to_json()))
    else:
        for n, c in enumerate(s.coeffs):
            body = c.to_latex() if fmt == "latex" else c.to_text()
            print(f"t^{n}: {body}")


def cmd_pexp(args, fmt):
    _print_series(pexp(_read_series(args.input, args.order)), fmt)


def cmd_plog(args, fmt):
    _print_series(plog(_read_series(args.input, args.order)), fmt)


def cmd_sym(args, fmt):
    data = _read_json(args.epoly)
    try:
        p = Poly2.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{args.epoly}: not a polynomial ({exc})") from None
    _print_series(sym_series(p, args.order), fmt)


def cmd_cartan(args, fmt):
    if args.genus < 1 or args.n < 1:
        raise UsageError("cartan needs --genus >= 1 and --n >= 1")
    print(render_poly(cv.cartan_brane(args.genus, args.n), fmt))


def cmd_invariants(args, fmt):
    spec = group_from_args(args)
    p = cv.epoly(spec, args.n, args.stratum)
    euler = cv.euler_char(p)
    # an empty stratum has E = 0 and no components
    components = cv.component_count(p) if p else Fraction(0)
    if fmt == "json":
        print(_dump({"euler": _frac(euler), "components": _frac(components)}))
    else:
        print(f"euler: {euler}, components: {components}")


def cmd_verify(args, fmt):
    results = run_suite(args.suite, args.seed)
    failed = [r for r in results if not r.passed]
    if fmt == "json":
        print(_dump([r.to_json() for r in results]))
    else:
        for r in results:
            line = f"{r.status.upper()}  {r.name}"
            print(line if r.passed else f"{line}: {r.detail}")
        print(f"{len(results) - len(failed)} passed, {len(failed)} failed (seed {args.seed})")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="epoly", description="E-polynomials of character varieties via plethystic calculus")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("epoly", help="E-polynomial of X_Gamma GL_n or one of its strata")
    _add_group_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stratum", type=_parse_stratum, default=cv.StratumLabel("full"))
    _add_format(p)
    p.set_defaults(func=cmd_epoly)

    p = sub.add_parser("series", help="generating series of full or irreducible E-polynomials")
    _add_group_args(p)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--kind", choices=("full", "irr"), default="full")
    _add_format(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("strata", help="all partition-type strata of X_Gamma GL_n")
    _add_group_args(p)
    p.add_argument("--n", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_strata)

    p = sub.add_parser("partitions", help="list partitions or rectangular partitions of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rectangular", action="store_true")
    p.add_argument("--fibers", action="store_true", help="group rectangular partitions by glued partition")
    p.add_argument("--format", choices=("text", "json"), default=None)
    p.set_defaults(func=cmd_partitions)

    for name, func, helptext in (("pexp", cmd_pexp, "plethystic exponential of a series"),
                                 ("plog", cmd_plog, "plethystic logarithm of a series")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--in", dest="input", required=True, help="series JSON file, or - for stdin")
        p.add_argument("--order", type=int)
        _add_format(p)
        p.set_defaults(func=func)

    p = sub.add_parser("sym", help="E-polynomials of symmetric products Sym^n X")
    p.add_argument("--epoly", required=True, help="Poly2 JSON file with E(X), or - for stdin")
    p.add_argument("--order", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_sym)

    p = sub.add_parser("cartan", help="E-polynomial of the Cartan brane")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_cartan)

    p = sub.add_parser("invariants", help="Euler characteristic and component count")
    _add_group_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stratum", type=_parse_stratum, default=cv.StratumLabel("irr"))
    _add_format(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify", help="run the reproduction checks")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--format", choices=("text", "json"), default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        fmt = args.format or _default_format()
        if fmt not in FORMATS or (args.command in ("partitions", "verify") and fmt == "latex"):
            fmt = "text"
        if getattr(args, "order", None) is not None and args.order < 0:
            raise UsageError("--order must be >= 0")
        for name in ("n", "max_n"):
            if getattr(args, name, None) is not None and getattr(args, name) < 1:
                raise UsageError(f"--{name.replace('_', '-')} must be >= 1")
        return args.func(args, fmt) or 0
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except (ArithmeticError, LookupError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

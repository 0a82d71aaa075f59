"""Command-line front door.

One command per process: evaluate an expression, query a predicate, run a
von Staudt construction or an interpretation demo, or replay a seeded
invariant suite.  Results go to standard output one value per line, with
booleans as true/false and elements in canonical literal syntax; --json
switches to one JSON object per result.  Exit status 0 means success, 1 a
domain error, 2 a usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import checks, geometry, interp
from .dilated import GPrimeElem, orbit_conjugate
from .dilated import in_centralizer as gp_in_centralizer
from .errors import DomainError, ParseError, UsageError
from .heisenberg import EPoint, GElem, coll, in_centralizer, is_line_pair
from .termlang import (
    eval_expr,
    parse_element_text,
    parse_expr_text,
    parse_point_text,
    parse_gprime_text,
    parse_scalar_text,
)


def render_value(value) -> str:
    """Canonical one-line text for any value a command can produce."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, tuple):
        return "*".join(render_value(v) for v in value)
    if isinstance(value, interp.RNum):
        return str(interp.decode(value))
    return str(value)


def _emit(command: str, value, as_json: bool):
    canonical = render_value(value)
    if as_json:
        result = value if isinstance(value, bool) else canonical
        print(json.dumps({"command": command, "result": result, "canonical": canonical}))
    else:
        print(canonical)


def _affine(p: EPoint) -> geometry.AffPoint:
    return geometry.AffPoint(p.a, p.b)


def _cmd_eval(args) -> int:
    value = eval_expr(parse_expr_text(args.expr))
    _emit("eval", value, args.json)
    return 0


def _cmd_coll(args) -> int:
    points = [parse_point_text(t) for t in (args.p, args.q, args.r)]
    _emit("coll", coll(*points), args.json)
    return 0


def _cmd_centralizer(args) -> int:
    g = parse_element_text(args.g)
    h = parse_element_text(args.h)
    if isinstance(g, GElem) and isinstance(h, GElem):
        verdict = in_centralizer(h, g)
    elif isinstance(g, GPrimeElem) and isinstance(h, GPrimeElem):
        verdict = gp_in_centralizer(h, g)
    else:
        raise UsageError("both elements must come from the same group")
    _emit("centralizer", verdict, args.json)
    return 0


def _cmd_in_l(args) -> int:
    a = parse_scalar_text(args.a)
    b = parse_scalar_text(args.b)
    h = parse_element_text(args.element)
    if not isinstance(h, GElem):
        raise UsageError("in-l takes a 3-entry element literal")
    _emit("in-l", interp.definable_reals_demo("in_l", [a, b, h]), args.json)
    return 0


def _cmd_line_pair(args) -> int:
    g1 = parse_element_text(args.g1)
    g2 = parse_element_text(args.g2)
    if not (isinstance(g1, GElem) and isinstance(g2, GElem)):
        raise UsageError("line-pair takes two 3-entry element literals")
    _emit("line-pair", is_line_pair(g1, g2), args.json)
    return 0


def _cmd_vs(args, op) -> int:
    x = parse_scalar_text(args.x)
    y = parse_scalar_text(args.y)
    aux = _affine(parse_point_text(args.aux))
    value = geometry.vs_add(x, y, aux) if op == "add" else geometry.vs_mul(x, y, aux)
    _emit(f"vs-{op}", value, args.json)
    return 0


def _cmd_interp(args) -> int:
    arity = 1 if args.op == "isint" else 2
    if len(args.values) != arity:
        raise UsageError(f"interp {args.op} takes {arity} scalar argument(s)")
    scalars = [parse_scalar_text(t) for t in args.values]
    if args.op == "add":
        value = interp.interp_add(interp.encode(scalars[0]), interp.encode(scalars[1]))
    elif args.op == "mul":
        value = interp.interp_mul(interp.encode(scalars[0]), interp.encode(scalars[1]))
    else:
        value = interp.interp_is_int(interp.encode(scalars[0]))
    _emit(f"interp {args.op}", value, args.json)
    return 0


def _cmd_orbit(args) -> int:
    g = parse_gprime_text(args.element)
    _emit("orbit", orbit_conjugate(g), args.json)
    return 0


def _cmd_check(args) -> int:
    result = checks.run_suite(args.suite, args.seed, args.count)
    label = f"check {args.suite}"
    if result.ok:
        _emit(label, f"ok {result.passed}/{result.total}", args.json)
        return 0
    _emit(label, f"fail {result.passed}/{result.total}: {result.failure}", args.json)
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilreal",
        description=(
            "Exact calculator for a nilpotent group quotient that recovers "
            "real-field arithmetic with an integer predicate."
        ),
    )
    parser.add_argument("--json", action="store_true", help="emit JSON objects")
    sub = parser.add_subparsers(dest="command")

    def command(name: str, help_text: str):
        p = sub.add_parser(name, help=help_text)
        # late --json so the flag may follow the subcommand as well
        p.add_argument(
            "--json", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS
        )
        return p

    p = command("eval", "evaluate an expression (group words, calls, scalars)")
    p.add_argument("expr")

    p = command("coll", "collinearity of three plane points (a,b)")
    p.add_argument("p")
    p.add_argument("q")
    p.add_argument("r")

    p = command("centralizer", "does the second element commute with the first?")
    p.add_argument("g")
    p.add_argument("h")

    p = command("in-l", "membership in the line subgroup with direction (a, b)")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("element")

    p = command("line-pair", "the line cut out by two centralizers, if any")
    p.add_argument("g1")
    p.add_argument("g2")

    p = command("vs-add", "von Staudt sum of two scalars")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("aux", nargs="?", default="(1,1)", help="off-axis point, default (1,1)")

    p = command("vs-mul", "von Staudt product of two scalars")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("aux", nargs="?", default="(1,1)", help="off-axis point, default (1,1)")

    p = command("interp", "arithmetic through the group interpretation")
    p.add_argument("op", choices=("add", "mul", "isint"))
    p.add_argument("values", nargs="+")

    p = command("orbit", "conjugate the unit shear by a dilation-centralizer element")
    p.add_argument("element")

    p = command("check", "run a seeded invariant suite")
    p.add_argument("suite", choices=checks.SUITE_NAMES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200)

    command("help", "show this help")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        code = stop.code
        return code if isinstance(code, int) else 2
    if args.command is None:
        parser.print_help(sys.stderr)
        return 2
    if args.command == "help":
        parser.print_help()
        return 0
    try:
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "coll":
            return _cmd_coll(args)
        if args.command == "centralizer":
            return _cmd_centralizer(args)
        if args.command == "in-l":
            return _cmd_in_l(args)
        if args.command == "line-pair":
            return _cmd_line_pair(args)
        if args.command == "vs-add":
            return _cmd_vs(args, "add")
        if args.command == "vs-mul":
            return _cmd_vs(args, "mul")
        if args.command == "interp":
            return _cmd_interp(args)
        if args.command == "orbit":
            return _cmd_orbit(args)
        if args.command == "check":
            return _cmd_check(args)
    except DomainError as bad:
        print(f"error: {bad}", file=sys.stderr)
        return 1
    except (ParseError, UsageError) as bad:
        print(f"error: {bad}", file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled command {args.command!r}")


def run() -> None:
    raise SystemExit(main())

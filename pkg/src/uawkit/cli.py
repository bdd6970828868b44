"""Command-line front end (``uaw``).

Exit codes: 0 success, 1 a check failed, 2 bad input (usage, parse or
context errors), 3 the requested operation is undefined for the input
(for example ρ̃ outside U', or a forbidden value of q).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import __version__
from .errors import ContextError, ParseError, UawError

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_UNDEFINED = 0, 1, 2, 3

_UNICODE = {
    "Lam": "Λ", "nx": "ν_x", "ny": "ν_y", "nz": "ν_z", "Phi": "Φ",
    "al": "α", "be": "β", "ga": "γ", "Om": "Ω", "K": "k^-1", "Y": "y^-1",
}
_WORD = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


def prettify(text):
    """Unicode rendering of surface syntax (display only, not re-parseable)."""
    text = _WORD.sub(lambda m: _UNICODE.get(m.group(0), m.group(0)), text)
    return text.replace(" - ", " − ").replace("*", "·")


def _seed(args):
    env = os.environ.get("UAW_SEED")
    if env is not None and env.strip():
        return int(env)
    return args.seed


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(prettify(text) if getattr(args, "unicode", False) else text)


def _element(args, expr, algebra):
    from .words import evaluate, parse

    return evaluate(parse(expr), algebra)


def cmd_normalize(args):
    val = _element(args, args.expr, args.algebra)
    out = str(val)
    _emit(args, {"algebra": args.algebra, "input": args.expr, "result": out}, out)
    return EXIT_OK


def cmd_map(args):
    from .hom import natural

    out = str(natural(_element(args, args.expr, "delta")))
    _emit(args, {"input": args.expr, "result": out}, out)
    return EXIT_OK


def cmd_project(args):
    from .uqsl2 import grade_project

    val = _element(args, args.expr, args.algebra)
    out = str(grade_project(val, args.degree))
    _emit(
        args,
        {"algebra": args.algebra, "degree": args.degree, "input": args.expr, "result": out},
        out,
    )
    return EXIT_OK


_AUTOS = ("sigma_tilde", "rho_tilde", "rho", "sigma")


def cmd_act(args):
    from .tensor import rho_tilde, sigma_tilde
    from .uaw import psl2_act

    auto = args.auto
    if auto in ("sigma_tilde", "rho_tilde"):
        val = _element(args, args.expr, "tensor")
        res = (sigma_tilde if auto == "sigma_tilde" else rho_tilde)(val)
    else:
        val = _element(args, args.expr, "delta")
        res = psl2_act(auto, val)
    out = str(res)
    _emit(args, {"auto": auto, "input": args.expr, "result": out}, out)
    return EXIT_OK


def _fmt_matrix(m):
    cells = [[str(v) for v in row] for row in m.rows]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)


def cmd_module_eval(args):
    from .repmod import build_module, evaluate_on_module

    m = build_module(args.n, args.eps, Fraction(args.q))
    mat = evaluate_on_module(args.expr, m)
    payload = {
        "n": args.n,
        "eps": args.eps,
        "q": str(m.q_val),
        "input": args.expr,
        "matrix": [[str(v) for v in row] for row in mat.rows],
    }
    _emit(args, payload, _fmt_matrix(mat))
    return EXIT_OK


def cmd_check(args):
    from .suites import run_suite

    rep = run_suite(args.suite, seed=_seed(args), bound=args.bound)
    if args.json:
        print(rep.to_json(timings=args.timings))
    else:
        print(rep.format_table(timings=args.timings))
    return EXIT_OK if rep.passed else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(
        prog="uaw",
        description="Exact computations in the universal Askey-Wilson algebra and U_q(sl2).",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="emit JSON on stdout")
        sp.add_argument("--unicode", action="store_true", help="pretty Unicode output")

    sp = sub.add_parser("normalize", help="print the canonical form of an expression")
    sp.add_argument("--algebra", choices=("u", "tensor", "delta"), default="u")
    sp.add_argument("expr")
    common(sp)
    sp.set_defaults(func=cmd_normalize)

    sp = sub.add_parser("check", help="run a verification suite")
    sp.add_argument(
        "suite",
        choices=("u-identities", "grading", "tensor", "delta", "hom", "diagrams", "modules", "all"),
    )
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--bound", type=int, default=None, help="degree bound for the rank checks")
    sp.add_argument("--timings", action="store_true", help="include wall times")
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("map", help="apply the homomorphism to a Delta expression")
    sp.add_argument("expr")
    common(sp)
    sp.set_defaults(func=cmd_map)

    sp = sub.add_parser("project", help="homogeneous component of a given degree")
    sp.add_argument("--algebra", choices=("u", "tensor"), default="u")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("expr")
    common(sp)
    sp.set_defaults(func=cmd_project)

    sp = sub.add_parser("act", help="apply an automorphism")
    sp.add_argument("--auto", choices=_AUTOS, required=True)
    sp.add_argument("expr")
    common(sp)
    sp.set_defaults(func=cmd_act)

    sp = sub.add_parser("module-eval", help="matrix of a U expression on L(n, eps)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--eps", type=int, choices=(1, -1), default=1)
    sp.add_argument("--q", required=True, help="rational value of q, e.g. 2 or 3/2")
    sp.add_argument("expr")
    common(sp)
    sp.set_defaults(func=cmd_module_eval)
    return p


def _error(args, kind, exc, code):
    text = str(exc)
    if getattr(args, "json", False):
        payload = {"error": kind, "message": text}
        pos = getattr(exc, "position", None)
        if pos is not None:
            payload["position"] = pos
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(f"error: {text}", file=sys.stderr)
        pos = getattr(exc, "position", None)
        expr = getattr(args, "expr", None)
        if pos is not None and expr is not None:
            print(f"  {expr}\n  {' ' * pos}^", file=sys.stderr)
    return code


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ContextError) as exc:
        return _error(args, type(exc).__name__, exc, EXIT_INPUT)
    except (ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, UawError) and not isinstance(exc, (ParseError, ContextError)):
            return _error(args, type(exc).__name__, exc, EXIT_UNDEFINED)
        return _error(args, type(exc).__name__, exc, EXIT_INPUT)
    except UawError as exc:
        return _error(args, type(exc).__name__, exc, EXIT_UNDEFINED)


if __name__ == "__main__":
    sys.exit(main())

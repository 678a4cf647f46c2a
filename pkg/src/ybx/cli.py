"""Command-line entry point ``ybx``.

Exit codes: 0 when everything passed, 1 on a verification failure, 2 on a
usage or domain error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import rmatrix
from .algebra import LAMBDA, parse_rational
from .errors import ConfigError, DomainError, YbxError
from .verify import SUITE_NAMES, SuiteConfig, format_report, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SYMBOLIC = ("symbolic", "lambda", "λ")


def parse_point(text: str) -> rmatrix.TorusPoint:
    parts = [p for p in text.replace(" ", "").strip("()[]").split(",") if p]
    return rmatrix.TorusPoint(tuple(parse_rational(p) for p in parts))


def _point_strs(t: rmatrix.TorusPoint) -> list:
    return [str(c) for c in t.coords]


def cmd_eval(args) -> int:
    x, y = parse_point(args.x), parse_point(args.y)
    if x.n != args.n or y.n != args.n:
        raise ConfigError(f"--x and --y must have {args.n} coordinates")
    xp, yp = rmatrix.apply_R(x, y)
    if args.json:
        print(json.dumps({"n": args.n, "x": _point_strs(x), "y": _point_strs(y),
                          "x_out": _point_strs(xp), "y_out": _point_strs(yp)}))
    else:
        print(f"x' = {xp}")
        print(f"y' = {yp}")
    return EXIT_OK


def cmd_matrix(args) -> int:
    point = parse_point(args.y)
    param = LAMBDA if args.a.strip().lower() in SYMBOLIC else parse_rational(args.a)
    build = {"af": rmatrix.matrix_af, "ag": rmatrix.matrix_ag, "af-inv": rmatrix.matrix_af_inv}[args.kind]
    M = build(point, param)
    entries = [[str(v) for v in row] for row in M.rows]
    if args.json:
        print(json.dumps({"kind": args.kind, "y": _point_strs(point), "a": str(param),
                          "field": M.field, "entries": entries}, ensure_ascii=False))
    else:
        width = max(len(e) for row in entries for e in row)
        for row in entries:
            print("[ " + "  ".join(e.rjust(width) for e in row) + " ]")
    return EXIT_OK


def _run(cfg: SuiteConfig, as_json: bool) -> int:
    report = run_suite(cfg)
    if as_json:
        print(json.dumps(report.to_dict(), ensure_ascii=False))
    else:
        print(format_report(report))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_verify(args) -> int:
    cfg = SuiteConfig(args.suite, n=args.n, m=args.m, trials=args.trials, seed=args.seed,
                      bound=args.bound, resample_cap=args.resample_cap,
                      output="json" if args.json else "text", workers=args.workers)
    return _run(cfg, args.json)


def cmd_group(args) -> int:
    cfg = SuiteConfig(args.check, n=args.n, trials=args.trials, seed=args.seed,
                      bound=args.bound, output="json" if args.json else "text")
    return _run(cfg, args.json)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ybx", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="print R(x, y)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", required=True, help='comma-separated rationals, e.g. "1,2/3"')
    p.add_argument("--y", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("matrix", help="print A_f, A_g or the closed-form inverse of A_f")
    p.add_argument("kind", choices=["af", "ag", "af-inv"])
    p.add_argument("--y", required=True, help="the point the matrix is built from")
    p.add_argument("--a", required=True, help='rational parameter, or "symbolic" for λ')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("verify", help="run a randomized exact verification suite")
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--m", type=int, default=3, help="grid columns, or tuple length for conjugation")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=20)
    p.add_argument("--resample-cap", type=int, default=100)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("group", help="symbolic structure-group checks over Q(λ)")
    p.add_argument("check", choices=["relation", "transpose"])
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=20)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_group)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, DomainError, ValueError, YbxError) as exc:
        print(f"ybx: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

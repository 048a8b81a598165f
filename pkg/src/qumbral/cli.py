"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 math-domain error.  Results go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import presets
from .algebra import Poly, Rational, as_rational, poly_to_json, rational, rational_to_str
from .errors import ParseError, QUmbralError
from .parser import parse_poly, render
from .psi import psi_from_table
from .qcore import QContext, apply_q, apply_xhat, translate
from .qintegral import q_antiderivative
from .taylor import bernoulli_taylor
from .verify import SUITES, corrupt_psi, minimal_failure, run_suite

PRESETS = {
    "classical": "Q = d/dx on monomials, psi_n = 1/n!",
    "jackson": "Jackson q-derivative (f(x) - f(qx))/((1-q)x); needs --q",
    "psi": "psi-derivative x^n -> n_psi x^(n-1); needs --psi with the psi_n table",
    "falling": "forward difference f(x+1) - f(x) on falling factorials",
}


class UsageError(Exception):
    pass


def _rational(text: str) -> Rational:
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _psi_table(text: str) -> list[Rational]:
    return [_rational(part) for part in text.split(",")]


def build_context(args, cap: int) -> QContext:
    name = args.preset or "classical"
    if name == "classical":
        return presets.classical(cap)
    if name == "falling":
        return presets.forward_difference(cap)
    if name == "jackson":
        if args.q is None:
            raise UsageError("--preset jackson requires --q")
        if args.q == 1:
            return presets.classical(cap)
        return presets.jackson(args.q, cap)
    if name == "psi":
        if args.psi is None:
            raise UsageError("--preset psi requires --psi")
        return presets.psi_derivative(psi_from_table(args.psi), cap)
    raise UsageError(f"unknown preset {name!r}")


def verify_contexts(args, cap: int) -> list[QContext]:
    if args.preset is None:
        return presets.standard_presets(cap)
    if args.preset == "jackson" and args.q is None:
        return [presets.jackson(q, cap) for q in presets.JACKSON_SAMPLE_QS]
    return [build_context(args, cap)]


def _parse_f(args) -> Poly:
    if args.f is None:
        raise UsageError("--f is required")
    return parse_poly(args.f)


def _default_cap(args, deg: int, order: int) -> int:
    if args.cap is not None:
        return args.cap
    if args.preset == "psi" and args.psi is not None:
        return len(args.psi) - 1
    return max(16, deg + order + 2)


def cmd_expand(args, out) -> int:
    f = _parse_f(args)
    cap = _default_cap(args, max(f.degree, 0), args.order)
    ctx = build_context(args, cap)
    exp = bernoulli_taylor(ctx, f, args.y, args.order)
    if args.format == "json":
        out.write(json.dumps(exp.to_json()) + "\n")
    else:
        out.write(f"preset = {ctx.name}\n")
        out.write(f"f = {render(f)}\n")
        out.write(f"y = {rational_to_str(exp.y)}, order = {exp.order}\n")
        for k, term in enumerate(exp.terms):
            out.write(f"term[{k}] = {render(term)}\n")
        out.write(f"remainder = {render(exp.remainder)}\n")
        out.write(f"reconstructed = {render(exp.reconstructed)}\n")
        out.write(f"ok = {'true' if exp.ok else 'false'}\n")
    return 0 if exp.ok else 1


def cmd_apply(args, out) -> int:
    f = _parse_f(args)
    cap = _default_cap(args, max(f.degree, 0), 0)
    ctx = build_context(args, cap)
    if args.op == "Q":
        result = apply_q(ctx, f)
    elif args.op == "xhat":
        result = apply_xhat(ctx, f)
    elif args.op == "integrate":
        result = q_antiderivative(ctx, f)
    else:
        if args.y is None:
            raise UsageError("--op translate requires --y")
        result = translate(ctx, args.y, f)
    if args.format == "json":
        out.write(json.dumps({"op": args.op, "result": poly_to_json(result)}) + "\n")
    else:
        out.write(render(result) + "\n")
    return 0


def cmd_verify(args, out) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    if args.max_deg < 0 or args.order < 0:
        raise UsageError("--max-deg and --order must be >= 0")
    cap = args.cap if args.cap is not None else max(16, args.max_deg + args.order + 2)
    contexts = verify_contexts(args, cap)
    if args.corrupt_psi is not None:
        if not 1 <= args.corrupt_psi <= cap:
            raise UsageError(f"--corrupt-psi must be in [1, {cap}]")
        contexts = [corrupt_psi(ctx, args.corrupt_psi) for ctx in contexts]
    suites = SUITES if args.suite == "all" else (args.suite,)
    reports = []
    for suite in suites:
        t0 = time.perf_counter()
        report = run_suite(suite, contexts, args.trials, args.seed, args.max_deg, args.order)
        report.elapsed = time.perf_counter() - t0
        print(f"[{suite}] {report.elapsed:.2f}s", file=sys.stderr)
        reports.append(report)
    failed = any(not r.ok for r in reports)
    if args.format == "json":
        payload = {
            "seed": args.seed,
            "ok": not failed,
            "suites": [
                {
                    "suite": r.suite,
                    "trials": r.trials,
                    "ok": r.ok,
                    "failures": [fl.to_json() for fl in sorted(r.failures, key=lambda fl: (fl.preset, fl.trial))],
                }
                for r in reports
            ],
        }
        out.write(json.dumps(payload) + "\n")
    else:
        for r in reports:
            for preset, n, nfail in r.per_preset:
                status = "ok" if not nfail else "FAIL"
                out.write(f"{r.suite:<11} {preset:<24} {n - nfail}/{n} passed  {status}\n")
                if nfail:
                    fl = minimal_failure([x for x in r.failures if x.preset == preset])
                    desc = ", ".join(f"{k} = {v}" for k, v in fl.inputs.items())
                    out.write(f"  counterexample (trial {fl.trial}): {desc}\n")
                    out.write(f"    expected: {fl.expected}\n")
                    out.write(f"    actual:   {fl.actual}\n")
        total = sum(len(r.failures) for r in reports)
        out.write("OK\n" if not failed else f"FAILED: {total} failure(s)\n")
    return 1 if failed else 0


def cmd_presets(args, out) -> int:
    if args.format == "json":
        out.write(json.dumps(PRESETS) + "\n")
    else:
        for name, desc in PRESETS.items():
            out.write(f"{name:<10} {desc}\n")
    return 0


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--preset", choices=sorted(PRESETS))
    common.add_argument("--q", type=_rational)
    common.add_argument("--psi", type=_psi_table, help="comma-separated psi_0,psi_1,... table")
    common.add_argument("--cap", type=int)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="qumbral", description="Exact Q-umbral calculus toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="Bernoulli-Taylor expansion with Cauchy remainder")
    p.add_argument("--f", required=True)
    p.add_argument("--y", type=_rational, default=rational(0))
    p.add_argument("--order", type=int, default=1)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("apply", parents=[common], help="apply Q, xhat, the Q-integral or a translation")
    p.add_argument("--op", choices=("Q", "xhat", "integrate", "translate"), required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--y", type=_rational)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("verify", parents=[common], help="seeded randomized identity checks")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-deg", type=int, default=10)
    p.add_argument("--order", type=int, default=12)
    p.add_argument("--corrupt-psi", type=int, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("presets", parents=[common], help="list available presets")
    p.set_defaults(func=cmd_presets)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except QUmbralError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

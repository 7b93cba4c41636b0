"""Command-line front-end: computation and verification as subcommands.

Output is deterministic byte-for-byte.  Text tables are tab-separated;
polynomials use the display grammar of the polynomial module.  With
``--format json`` every rational is emitted as a two-field record of
decimal strings (``{"num": ..., "den": ...}``) -- never as a float,
because the coefficients outgrow 64-bit range almost immediately.

Exit codes: 0 on success with all verifications passing, 1 if any
verification instance fails, 2 on usage or parse errors (which print a
usage message to stderr and nothing to stdout).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from contextlib import redirect_stderr, redirect_stdout
from typing import IO, Iterable

from .exact_arith import Rational
from .faulhaber import (
    FaulhaberForm,
    bernoulli,
    faulhaber_coefficients,
    infer_odd_bernoulli,
    power_sum_direct,
    power_sum_poly_n,
    power_sum_tform,
    telescoping_check,
    verify_faulhaber,
    verify_pascal_identity,
)
from .polynomial import Polynomial, poly_eval

_DECIMAL_INT = re.compile(r"[0-9]+")


def _uint(minimum: int):
    """argparse type for a nonnegative decimal integer with a lower bound."""

    def parse(text: str) -> int:
        if not _DECIMAL_INT.fullmatch(text):
            raise argparse.ArgumentTypeError(f"expected a nonnegative decimal integer, got {text!r}")
        value = int(text)
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be at least {minimum}, got {value}")
        return value

    return parse


def _rational_json(q: Rational) -> dict:
    return {"num": str(q.numerator), "den": str(q.denominator)}


def _polynomial_json(p: Polynomial) -> dict:
    # Coefficients ascending by degree, matching the in-memory layout.
    return {"var": p.var, "coefficients": [_rational_json(c) for c in p.coeffs]}


def _emit_json(payload: dict, out: IO[str]) -> None:
    print(json.dumps(payload, indent=2), file=out)


def _factored_tform_text(form: FaulhaberForm) -> str:
    return f"({form.p}) * T^2"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powersums",
        description="Exact power-sum polynomials, Bernoulli numbers, and T-basis forms.",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default: text)")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, description=help_text)
        # Allow --format after the subcommand too.  SUPPRESS keeps the
        # subparser from clobbering a value parsed by the root parser.
        p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS,
                       help="output format (default: text)")
        return p

    p_bernoulli = add("bernoulli", "print B_0..B_K, one 'index<TAB>value' line per number")
    p_bernoulli.add_argument("k", type=_uint(0), metavar="K", help="largest index, K >= 0")

    p_powersum = add("powersum", "print the power-sum polynomial S_M")
    p_powersum.add_argument("exponent", type=_uint(1), metavar="M", help="exponent, M >= 1")
    p_powersum.add_argument("--basis", choices=("n", "t"), default="n",
                            help="n: polynomial in n; t: factored (P) * T^2, odd M >= 3 only")

    p_tform = add("tform", "print the factored T-basis form of S_{2M+1} as (P) * T^2")
    p_tform.add_argument("index", type=_uint(1), metavar="M", help="form index, M >= 1 (exponent 2M+1)")

    p_coeffs = add("coeffs", "print the T-form coefficients of S_{2M+1}, highest degree first")
    p_coeffs.add_argument("index", type=_uint(1), metavar="M", help="form index, M >= 1")

    p_verify = add("verify", "run an identity suite and print one PASS/FAIL line per instance")
    p_verify.add_argument("suite", choices=("pascal", "faulhaber", "odd-bernoulli", "telescoping"))
    p_verify.add_argument("--max", type=_uint(1), default=None, metavar="M",
                          help="largest index m (default 40; pascal starts at m=2)")
    p_verify.add_argument("--max-m", type=_uint(1), default=None, metavar="M",
                          help="telescoping only: largest exponent m (default 10)")
    p_verify.add_argument("--max-n", type=_uint(1), default=None, metavar="N",
                          help="telescoping only: largest upper limit N (default 50)")

    p_eval = add("eval", "evaluate S_M at N both symbolically and by direct summation")
    p_eval.add_argument("exponent", type=_uint(1), metavar="M", help="exponent, M >= 1")
    p_eval.add_argument("n", type=_uint(0), metavar="N", help="upper summation limit, N >= 0")

    return parser


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    """Cross-field checks that argparse types cannot express; errors exit 2."""
    if args.command == "powersum" and args.basis == "t":
        if args.exponent < 3 or args.exponent % 2 == 0:
            parser.error("--basis t requires an odd exponent M >= 3")
    if args.command == "verify":
        if args.suite == "telescoping":
            if args.max is not None:
                parser.error("suite 'telescoping' takes --max-m/--max-n, not --max")
        else:
            if args.max_m is not None or args.max_n is not None:
                parser.error(f"suite {args.suite!r} takes --max, not --max-m/--max-n")
            if args.suite == "pascal" and args.max is not None and args.max < 2:
                parser.error("suite 'pascal' requires --max >= 2")


def _cmd_bernoulli(args: argparse.Namespace, out: IO[str]) -> int:
    values = [bernoulli(i) for i in range(args.k + 1)]
    if args.format == "json":
        _emit_json(
            {
                "command": "bernoulli",
                "max_index": args.k,
                "values": [
                    {"index": i, "value": _rational_json(v)} for i, v in enumerate(values)
                ],
            },
            out,
        )
    else:
        for i, v in enumerate(values):
            print(f"{i}\t{v}", file=out)
    return 0


def _cmd_powersum(args: argparse.Namespace, out: IO[str]) -> int:
    if args.basis == "n":
        poly = power_sum_poly_n(args.exponent)
        if args.format == "json":
            _emit_json(
                {
                    "command": "powersum",
                    "exponent": args.exponent,
                    "basis": "n",
                    "polynomial": _polynomial_json(poly),
                },
                out,
            )
        else:
            print(poly, file=out)
        return 0
    form = power_sum_tform((args.exponent - 1) // 2)
    if args.format == "json":
        _emit_json(
            {
                "command": "powersum",
                "exponent": args.exponent,
                "basis": "t",
                "index": form.m,
                "p": _polynomial_json(form.p),
                "t_power": 2,
            },
            out,
        )
    else:
        print(_factored_tform_text(form), file=out)
    return 0


def _cmd_tform(args: argparse.Namespace, out: IO[str]) -> int:
    form = power_sum_tform(args.index)
    if args.format == "json":
        _emit_json(
            {
                "command": "tform",
                "index": form.m,
                "exponent": 2 * form.m + 1,
                "p": _polynomial_json(form.p),
                "t_power": 2,
            },
            out,
        )
    else:
        print(_factored_tform_text(form), file=out)
    return 0


def _cmd_coeffs(args: argparse.Namespace, out: IO[str]) -> int:
    coeffs = faulhaber_coefficients(args.index)
    if args.format == "json":
        _emit_json(
            {
                "command": "coeffs",
                "index": args.index,
                "order": "descending",
                "coefficients": [_rational_json(c) for c in coeffs],
            },
            out,
        )
    else:
        print(" ".join(str(c) for c in coeffs), file=out)
    return 0


def _verify_instances(args: argparse.Namespace) -> tuple[dict, list[tuple[str, bool]]]:
    """Run the requested suite; returns (bounds-for-json, [(label, ok), ...])."""
    if args.suite == "pascal":
        top = 40 if args.max is None else args.max
        results = [(r.label, r.holds) for r in (verify_pascal_identity(m) for m in range(2, top + 1))]
        return {"max": top}, results
    if args.suite == "faulhaber":
        top = 40 if args.max is None else args.max
        results = [(r.label, r.holds) for r in (verify_faulhaber(m) for m in range(1, top + 1))]
        return {"max": top}, results
    if args.suite == "odd-bernoulli":
        top = 40 if args.max is None else args.max
        results = []
        for m in range(1, top + 1):
            inferred = infer_odd_bernoulli(m)
            ok = inferred == 0 and bernoulli(2 * m + 1) == 0
            results.append((f"odd-bernoulli m={m}", ok))
        return {"max": top}, results
    top_m = 10 if args.max_m is None else args.max_m
    top_n = 50 if args.max_n is None else args.max_n
    results = [
        (r.label, r.holds)
        for r in (telescoping_check(m, n) for m in range(1, top_m + 1) for n in range(1, top_n + 1))
    ]
    return {"max_m": top_m, "max_n": top_n}, results


def _cmd_verify(args: argparse.Namespace, out: IO[str]) -> int:
    bounds, results = _verify_instances(args)
    passed = sum(1 for _, ok in results if ok)
    total = len(results)
    if args.format == "json":
        _emit_json(
            {
                "command": "verify",
                "suite": args.suite,
                **bounds,
                "results": [{"label": label, "holds": ok} for label, ok in results],
                "passed": passed,
                "total": total,
                "all_pass": passed == total,
            },
            out,
        )
    else:
        for label, ok in results:
            print(f"{'PASS' if ok else 'FAIL'} {label}", file=out)
        print(f"{args.suite}: {passed}/{total} passed", file=out)
    return 0 if passed == total else 1


def _cmd_eval(args: argparse.Namespace, out: IO[str]) -> int:
    symbolic = poly_eval(power_sum_poly_n(args.exponent), args.n)
    direct = power_sum_direct(args.exponent, args.n)
    agree = symbolic == direct
    if args.format == "json":
        _emit_json(
            {
                "command": "eval",
                "exponent": args.exponent,
                "n": args.n,
                "polynomial": _rational_json(symbolic),
                "direct": _rational_json(Rational(direct)),
                "agree": agree,
            },
            out,
        )
    else:
        print(f"polynomial\t{symbolic}", file=out)
        print(f"direct\t{direct}", file=out)
        print(f"agree\t{'true' if agree else 'false'}", file=out)
    return 0 if agree else 1


_HANDLERS = {
    "bernoulli": _cmd_bernoulli,
    "powersum": _cmd_powersum,
    "tform": _cmd_tform,
    "coeffs": _cmd_coeffs,
    "verify": _cmd_verify,
    "eval": _cmd_eval,
}


def run(argv: Iterable[str], stdout: IO[str] | None = None, stderr: IO[str] | None = None) -> int:
    """Parse and execute one invocation, writing to the given sinks."""
    out = sys.stdout if stdout is None else stdout
    err = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        # argparse prints usage/help straight to sys.std{out,err}; route both.
        with redirect_stdout(out), redirect_stderr(err):
            args = parser.parse_args(list(argv))
            _validate(parser, args)
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 2
    return _HANDLERS[args.command](args, out)


def main(argv: list[str] | None = None) -> None:
    raise SystemExit(run(sys.argv[1:] if argv is None else argv))

"""Command-line entry point."""

import argparse
import json
import sys

from .commands import COMMANDS, InputError, Query, format_text, run_command
from .corpus import run_corpus

OPERATORS = ("shift", "q")


def build_parser():
    p = argparse.ArgumentParser(
        prog="diffgalois",
        description="Decide summability, product forms, dependence and differential "
                    "transcendence for shift and q-dilation difference equations.",
    )
    p.add_argument("command", nargs="?", choices=COMMANDS)
    p.add_argument("args", nargs="*",
                   help="optional operator (shift | q | q=<rational>) followed by expressions; "
                        "for iterate, one argument per matrix row with comma-separated entries")
    p.add_argument("--op", help="operator: shift or q (default shift)")
    p.add_argument("--q", help="q as an exact rational p/r, or 'symbolic' (default)")
    p.add_argument("--max-order", type=int, default=5, help="telescoper order bound (default 5)")
    p.add_argument("--n", type=int, default=1, dest="count", help="iteration count for iterate")
    p.add_argument("--kind", default="mult", choices=("mult", "add"),
                   help="galois: multiplicative (y -> a y) or additive (y -> y + f) equations")
    p.add_argument("--format", default="json", choices=("json", "text"))
    p.add_argument("--corpus", help="run a fixture corpus file ('builtin' for the shipped one) "
                        "instead of a single query")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers for --corpus")
    return p


def _protect_negatives(argv):
    # expressions such as -1/x would otherwise be read as options; a
    # leading space is harmless to the expression grammar
    out = []
    for tok in argv:
        if tok.startswith("-") and not tok.startswith("--") and tok != "-h" and len(tok) > 1:
            tok = " " + tok
        out.append(tok)
    return out


def _split_operator(args, op_flag):
    if args and (args[0] in OPERATORS or args[0].startswith("q=")):
        if op_flag is not None:
            raise InputError("operator given twice")
        return args[0], args[1:]
    return op_flag or "shift", args


def _error(message, fmt):
    if fmt == "json":
        print(json.dumps({"error": message}), file=sys.stderr)
    else:
        print(f"error: {message}", file=sys.stderr)
    return 2


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    ns = parser.parse_intermixed_args(_protect_negatives(argv))
    if ns.corpus:
        if ns.command:
            return _error("--corpus does not take a command", ns.format)
        try:
            summary = run_corpus(ns.corpus, jobs=max(1, ns.jobs))
        except OSError as exc:
            return _error(str(exc), ns.format)
        if ns.format == "json":
            print(json.dumps(summary, indent=2))
        else:
            for r in summary["results"]:
                print(f"line {r['line']}: {'PASS' if r['passed'] else 'FAIL'} {r['message']}")
            print(f"{summary['passed']}/{summary['cases']} passed")
        return 0 if summary["failed"] == 0 else 1
    if not ns.command:
        parser.print_usage(sys.stderr)
        return _error("a command is required", ns.format)
    try:
        operator, exprs = _split_operator(ns.args, ns.op)
        query = Query(command=ns.command, operator=operator, expressions=tuple(exprs), q=ns.q,
                      max_order=ns.max_order, count=ns.count, kind=ns.kind, fmt=ns.format)
        report = run_command(query)
    except InputError as exc:
        return _error(str(exc), ns.format)
    if ns.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(format_text(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())

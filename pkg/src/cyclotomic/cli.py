"""Command-line front end.

Exit status is 0 on success, 1 when a verification or cross-check fails and
2 on usage errors. Results go to stdout, diagnostics to stderr.
"""

import argparse
import sys

from . import polyz
from .bench import BenchMismatch, bench_range, write_csv
from .cyclo import CycloAlgo, OutOfApplicability, factor_unity, gamma, phi, psi, psi_def
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer: {text}")
    return value


def _algo(text):
    try:
        return CycloAlgo(text)
    except ValueError:
        choices = ", ".join(a.value for a in CycloAlgo)
        raise argparse.ArgumentTypeError(
            f"unknown algorithm {text!r} (choose from {choices})") from None


def _algo_list(text):
    names = [t for t in text.split(",") if t.strip()]
    if not names:
        raise argparse.ArgumentTypeError("empty algorithm list")
    return [_algo(t.strip()) for t in names]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser():
    parser = _Parser(prog="cyclotomic",
                     description="Cyclotomic polynomials built from lcms of Y^d - 1.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    for verb, text in [("phi", "cyclotomic polynomial Phi_n"),
                       ("psi", "inverse cyclotomic polynomial Psi_n"),
                       ("gamma", "Gamma_n = (Y^n - 1)/(Y - 1)"),
                       ("factor", "factorization of Y^n - 1 into Phi_d, d | n")]:
        p = sub.add_parser(verb, help=text)
        p.add_argument("n", type=_positive_int)
        p.add_argument("--algo", type=_algo, default=CycloAlgo.AUTO,
                       help="lcm|prime-lcm|recursive|radical|neg-odd|auto (default auto)")
        p.add_argument("--format", choices=("pretty", "coeffs"), default="pretty")

    p = sub.add_parser("verify", help="run verification sweeps over n = 1..max-n")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max-n", type=_positive_int, default=100)

    p = sub.add_parser("bench", help="time the Phi_n algorithms and write CSV")
    p.add_argument("--from", dest="start", type=_positive_int, required=True)
    p.add_argument("--to", dest="stop", type=_positive_int, required=True)
    p.add_argument("--square-free-only", action="store_true")
    p.add_argument("--algos", type=_algo_list, required=True,
                   help="comma-separated algorithm names")
    p.add_argument("--csv", metavar="PATH", help="output file (default stdout)")
    return parser


def _render(poly, fmt):
    return polyz.format_coeffs(poly) if fmt == "coeffs" else polyz.format_pretty(poly)


def _cmd_poly(args, out):
    if args.verb == "phi":
        poly = phi(args.n, args.algo)
    elif args.verb == "psi":
        poly = psi_def(args.n) if args.algo is CycloAlgo.DEF_LCM else psi(args.n)
    else:
        poly = gamma(args.n)
    print(_render(poly, args.format), file=out)
    return EXIT_OK


def _cmd_factor(args, out):
    for d, poly in factor_unity(args.n, args.algo).parts:
        print(f"{d}: {_render(poly, args.format)}", file=out)
    return EXIT_OK


def _cmd_verify(args, out, err):
    names = SUITES if args.suite == "all" else (args.suite,)
    status = EXIT_OK
    for name in names:
        result = run_suite(name, args.max_n)
        print(result.summary(), file=out)
        for witness in result.failures:
            print(f"{name}: {witness}", file=err)
        if not result.ok:
            status = EXIT_FAIL
    return status


def _cmd_bench(args, out, err):
    if args.start > args.stop:
        raise UsageError(f"empty range {args.start}..{args.stop}")
    try:
        records = bench_range(range(args.start, args.stop + 1), args.algos,
                              square_free_only=args.square_free_only)
    except BenchMismatch as exc:
        print(f"bench: {exc}", file=err)
        return EXIT_FAIL
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            write_csv(records, fh)
        print(f"wrote {len(records)} records to {args.csv}", file=err)
    else:
        write_csv(records, out)
    return EXIT_OK


def run(argv, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        if args.verb in ("phi", "psi", "gamma"):
            return _cmd_poly(args, out)
        if args.verb == "factor":
            return _cmd_factor(args, out)
        if args.verb == "verify":
            return _cmd_verify(args, out, err)
        return _cmd_bench(args, out, err)
    except (UsageError, OutOfApplicability) as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE


def main():
    sys.exit(run(sys.argv[1:]))

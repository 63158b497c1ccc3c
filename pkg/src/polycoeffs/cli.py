"""Command-line front end; each subcommand maps to one library operation.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 resource limit.
"""

import argparse
import math
import sys

from . import analysis, approx, compositions, dist
from .coeffs import ResourceLimitError, central_coefficient, coefficient, triangle_row


def comma_separated_ints(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",")]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polycoeffs",
        description="Exact (l+1)-nomial triangle coefficients, sums of discrete "
        "uniform variables, and their normal approximations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("row", help="print an exact triangle row, one integer per line")
    p.add_argument("k", type=int, help="row index")
    p.add_argument("l", type=int, help="largest part value")

    p = sub.add_parser("coeff", help="print one exact coefficient")
    p.add_argument("k", type=int, help="row index")
    p.add_argument("n", type=int, help="coefficient index (out of range prints 0)")
    p.add_argument("l", type=int, help="largest part value")

    p = sub.add_parser("central", help="print the exact central coefficient, index floor(m*l/2)")
    p.add_argument("m", type=int, help="row index")
    p.add_argument("l", type=int, help="largest part value")

    p = sub.add_parser("approx", help="normal estimate of a coefficient or cell probability")
    p.add_argument("m", type=int, help="number of summands")
    p.add_argument("n", type=int, help="target index (ignored by --method central)")
    p.add_argument("l", type=int, help="largest part value")
    p.add_argument(
        "--method",
        required=True,
        choices=["pointwise", "cc-phi", "central"],
        help="pointwise density, continuity-corrected Phi difference, or central rectangle",
    )

    p = sub.add_parser("pmf", help="exact distribution of the sum, one probability per line")
    p.add_argument("m", type=int, help="number of summands")
    p.add_argument("l", type=int, help="largest part value")
    p.add_argument("--rational", action="store_true", help="print numerator/denominator")

    p = sub.add_parser("sample", help="simulate sums; prints 'n count' per outcome")
    p.add_argument("m", type=int, help="number of summands")
    p.add_argument("l", type=int, help="largest part value")
    p.add_argument("--count", type=int, required=True, help="number of simulated sums")
    p.add_argument("--seed", type=int, required=True, help="64-bit generator seed")

    p = sub.add_parser("errors", help="write the pointwise relative-error sweep as CSV")
    p.add_argument("m", type=int, help="number of summands")
    p.add_argument("l", type=int, help="largest part value")
    p.add_argument("--out", required=True, metavar="FILE", help="output CSV path")

    p = sub.add_parser("central-errors", help="write central-coefficient errors per m as CSV")
    p.add_argument("l", type=int, help="largest part value")
    p.add_argument(
        "--m-list", required=True, type=comma_separated_ints, metavar="A,B,C",
        help="comma-separated row indices",
    )
    p.add_argument("--out", required=True, metavar="FILE", help="output CSV path")

    p = sub.add_parser("compositions", help="count (or list) compositions of n into k bounded parts")
    p.add_argument("n", type=int, help="target sum")
    p.add_argument("k", type=int, help="number of parts")
    p.add_argument("a", type=int, help="smallest allowed part")
    p.add_argument("b", type=int, help="largest allowed part")
    p.add_argument(
        "--list", action="store_true", dest="list_parts",
        help="print every composition, comma-separated parts, lexicographic",
    )

    return parser


def _cmd_row(args: argparse.Namespace) -> None:
    for value in triangle_row(args.k, args.l).values:
        print(value)


def _cmd_coeff(args: argparse.Namespace) -> None:
    print(coefficient(args.k, args.n, args.l))


def _cmd_central(args: argparse.Namespace) -> None:
    print(central_coefficient(args.m, args.l))


def _cmd_approx(args: argparse.Namespace) -> None:
    if args.method == "pointwise":
        est = approx.pointwise_approx(args.m, args.n, args.l)
    elif args.method == "central":
        est = approx.central_approx(args.m, args.l)
    else:
        prob = approx.cc_phi_approx(args.m, args.n, args.l)
        log_value = math.log(prob) if prob > 0.0 else float("-inf")
        est = approx.LogApprox(log_value=log_value, value=prob)
    print(f"log_value={est.log_value!r}")
    if est.value is not None:
        print(f"value={est.value!r}")


def _cmd_pmf(args: argparse.Namespace) -> None:
    pmf = dist.exact_pmf(args.m, args.l)
    for prob in pmf.probs:
        if args.rational:
            print(f"{prob.numerator}/{prob.denominator}")
        else:
            print(repr(float(prob)))


def _cmd_sample(args: argparse.Namespace) -> None:
    cfg = dist.SamplerConfig(m=args.m, l=args.l, sample_count=args.count, seed=args.seed)
    for n, count in enumerate(dist.sample_sums(cfg)):
        print(f"{n} {count}")


def _cmd_errors(args: argparse.Namespace) -> None:
    analysis.write_error_records(analysis.error_sweep(args.m, args.l), args.out)


def _cmd_central_errors(args: argparse.Namespace) -> None:
    records = analysis.central_error_curve(args.l, args.m_list)
    analysis.write_error_records(records, args.out)


def _cmd_compositions(args: argparse.Namespace) -> None:
    if args.list_parts:
        for parts in compositions.enumerate_compositions(args.n, args.k, args.a, args.b):
            print(",".join(str(p) for p in parts))
    else:
        print(compositions.count_compositions(args.n, args.k, args.a, args.b))


_COMMANDS = {
    "row": _cmd_row,
    "coeff": _cmd_coeff,
    "central": _cmd_central,
    "approx": _cmd_approx,
    "pmf": _cmd_pmf,
    "sample": _cmd_sample,
    "errors": _cmd_errors,
    "central-errors": _cmd_central_errors,
    "compositions": _cmd_compositions,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())

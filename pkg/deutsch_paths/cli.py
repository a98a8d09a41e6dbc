"""Unified CLI dispatcher for all deutsch-paths commands."""

import argparse
import logging
import sys

from deutsch_paths.common.config import Config
from deutsch_paths.common.errors import InvalidSpecError

EXIT_VERIFY_FAILED = 1
EXIT_INVALID = 2
EXIT_DISAGREE = 3


def _invalid(message: str) -> None:
    print(f"Error: {message}", file=sys.stderr)
    sys.exit(EXIT_INVALID)


def _spec(args):
    from deutsch_paths.oracle import StripSpec

    return StripSpec(t=args.t, j=args.j, m=args.m)


def _closed_counts(spec, order: int) -> list:
    from deutsch_paths import strip

    if spec.m is None:
        return strip.phi_limit(spec.t, spec.j, order).to_counts()
    return strip.phi_closed(spec.m, spec.t, spec.j, order).to_counts()


def _dp_counts(spec, order: int) -> list:
    from deutsch_paths import oracle

    return oracle.count_series(spec, order).to_counts()


def _params(args, *names) -> dict:
    return {name: getattr(args, name) for name in names}


# ─── Counting ────────────────────────────────────────────────────────────────

def cmd_count(args):
    from deutsch_paths.common import format_coefficients

    spec = _spec(args)
    if args.n < 0:
        _invalid(f"--n must be nonnegative, got {args.n}")

    order = args.n + 1
    dp = _dp_counts(spec, order)[args.n]
    closed = _closed_counts(spec, order)[args.n] if (args.method == "closed" or args.check) else None
    value = closed if args.method == "closed" else dp

    params = _params(args, "n", "t", "j", "m", "method")
    print(format_coefficients([value], args.format, "count", params))

    if args.check and dp != closed:
        print(f"Error: methods disagree (dp={dp}, closed={closed})", file=sys.stderr)
        sys.exit(EXIT_DISAGREE)


def cmd_series(args):
    from deutsch_paths.common import format_coefficients

    spec = _spec(args)
    if args.trunc < 1:
        _invalid(f"--trunc must be at least 1, got {args.trunc}")

    if args.method == "closed":
        values = _closed_counts(spec, args.trunc)
    else:
        values = _dp_counts(spec, args.trunc)

    params = _params(args, "t", "j", "m", "trunc", "method")
    print(format_coefficients(values, args.format, "series", params))

    if args.check:
        other = _dp_counts(spec, args.trunc) if args.method == "closed" else _closed_counts(spec, args.trunc)
        if other != values:
            print("Error: methods disagree", file=sys.stderr)
            sys.exit(EXIT_DISAGREE)


def cmd_table(args):
    from deutsch_paths import oracle
    from deutsch_paths.common import format_grid

    if args.n_max < 0:
        _invalid(f"--n-max must be nonnegative, got {args.n_max}")
    table = oracle.count_table(args.n_max, args.t, args.m)
    dp_rows = [list(row) for row in table.rows]
    closed_rows = None

    if args.method == "closed" or args.check:
        order = args.n_max + 1
        columns = [_closed_counts(oracle.StripSpec(args.t, level, args.m), order)
                   for level in range(table.height + 1)]
        closed_rows = [[columns[level][n] for level in range(table.height + 1)] for n in range(order)]

    rows = closed_rows if args.method == "closed" else dp_rows
    params = _params(args, "n_max", "t", "m", "method")
    print(format_grid(rows, args.format, "table", params))

    if args.check and closed_rows != dp_rows:
        print("Error: methods disagree", file=sys.stderr)
        sys.exit(EXIT_DISAGREE)


def cmd_det(args):
    from deutsch_paths import strip
    from deutsch_paths.common import format_coefficients

    if args.m is None:
        _invalid("--m is required")
    if (args.t is None) != (args.j is None):
        _invalid("--t and --j must be given together")

    if args.t is None:
        poly = strip.det_system_poly(args.m)
    else:
        poly = strip.det_replaced_poly(args.m, args.t, args.j)

    params = _params(args, "m", "t", "j")
    if args.format == "text":
        print(poly)
    else:
        print(format_coefficients(poly.coeffs, args.format, "det", params))


# ─── Verification ────────────────────────────────────────────────────────────

def cmd_verify(args):
    from deutsch_paths import __version__, strip, verify
    from deutsch_paths.common import format_suites

    # one --t-max bounds both the level loops and the kernel identity
    t_max = Config.verify_t_max if args.t_max is None else args.t_max
    kernel_t_max = Config.kernel_t_max if args.t_max is None else args.t_max
    bounds = verify.VerifyBounds(
        m_max=args.m_max, t_max=t_max, n_max=args.n_max,
        trunc=args.trunc, kernel_t_max=kernel_t_max,
    )

    phi = verify.faulty_phi_closed if args.inject_fault else strip.phi_closed
    results = verify.run_suites(bounds, names=args.suite, phi=phi)

    print(format_suites(results, args.format, f"Deutsch paths v{__version__} verification"))
    if not all(r.passed for r in results):
        sys.exit(EXIT_VERIFY_FAILED)


# ─── Main dispatcher ─────────────────────────────────────────────────────────

def _add_spec_args(parser, with_j: bool = True):
    parser.add_argument("--t", type=int, required=True, help="Start level")
    if with_j:
        parser.add_argument("--j", type=int, required=True, help="End level")
    parser.add_argument("--m", type=int, default=None, help="Strip size; upper boundary m-1 (omit for unbounded)")


def _add_method_args(parser):
    parser.add_argument("--method", choices=("dp", "closed"), default="dp",
                        help="dp: dynamic programming oracle; closed: closed-form generating function")
    parser.add_argument("--check", action="store_true", help="Compute both methods; exit 3 if they disagree")


def _add_format_arg(parser, choices=Config.output_formats):
    parser.add_argument("--format", choices=choices, default="text", help="Output format")


def main(argv=None):
    from deutsch_paths import verify

    parser = argparse.ArgumentParser(
        prog="deutsch-paths",
        description="Deutsch paths: exact counts and verified generating functions",
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="Log progress to stderr")
    subparsers = parser.add_subparsers(dest="command")

    # count
    count_parser = subparsers.add_parser("count", help="Count n-step paths from t to j")
    count_parser.add_argument("--n", type=int, required=True, help="Number of steps")
    _add_spec_args(count_parser)
    _add_method_args(count_parser)
    _add_format_arg(count_parser, choices=("text", "json"))

    # series
    series_parser = subparsers.add_parser("series", help="Generating function coefficients 0..N-1")
    _add_spec_args(series_parser)
    series_parser.add_argument("--trunc", type=int, default=Config.default_trunc,
                               help=f"Number of coefficients (default: {Config.default_trunc})")
    _add_method_args(series_parser)
    _add_format_arg(series_parser)

    # table
    table_parser = subparsers.add_parser("table", help="Full count[n][j] grid")
    table_parser.add_argument("--n-max", type=int, required=True, help="Largest number of steps")
    _add_spec_args(table_parser, with_j=False)
    _add_method_args(table_parser)
    _add_format_arg(table_parser)

    # det
    det_parser = subparsers.add_parser("det", help="Exact system determinant D_m (or D(m;t,j) with --t/--j)")
    det_parser.add_argument("--m", type=int, default=None, help="Strip size")
    det_parser.add_argument("--t", type=int, default=None, help="Row of the unit right-hand side")
    det_parser.add_argument("--j", type=int, default=None, help="Replaced column")
    _add_format_arg(det_parser)

    # verify
    verify_parser = subparsers.add_parser("verify", help="Run the verification suites")
    verify_parser.add_argument("--suite", action="append", choices=list(verify.SUITES), default=None,
                               help="Run only this suite (repeatable)")
    verify_parser.add_argument("--m-max", type=int, default=Config.verify_m_max, help="Largest strip size")
    verify_parser.add_argument("--t-max", type=int, default=None,
                               help=f"Largest start/end level (default: {Config.verify_t_max}; kernel suite {Config.kernel_t_max})")
    verify_parser.add_argument("--n-max", type=int, default=Config.verify_n_max, help="Largest step count for oracle checks")
    verify_parser.add_argument("--trunc", type=int, default=Config.verify_trunc, help="Series truncation order")
    verify_parser.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    _add_format_arg(verify_parser)

    args = parser.parse_args(argv)

    if args.verbose:
        logging.basicConfig(
            level=logging.DEBUG,
            format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        )

    commands = {
        "count": cmd_count,
        "series": cmd_series,
        "table": cmd_table,
        "det": cmd_det,
        "verify": cmd_verify,
    }

    if args.command not in commands:
        parser.print_help()
        return

    try:
        commands[args.command](args)
    except InvalidSpecError as e:
        _invalid(str(e))


if __name__ == "__main__":
    main()

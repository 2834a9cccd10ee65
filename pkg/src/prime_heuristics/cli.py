"""Command-line front end.

Subcommands:
    mertens-ratio   dependency ratio C1(x) at checkpoints
    tuple SPEC      singular series and counts for an offset tuple
    bh POLY...      Bateman-Horn constant and counts for a polynomial family
    report          canned verification suite

Exit codes: 0 success, 1 unexpected error, 2 usage/config/parse error,
3 sieve range error, 4 polynomial overflow, 5 domain error.
"""

import argparse
import logging
import math
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import TypeVar

from . import __version__
from .config import RunConfig
from .core.constants import (
    DEFAULT_BRUTE_FORCE_LIMIT,
    DEFAULT_SEGMENT_SIZE,
    DEFAULT_TRUNCATION_LIMIT,
    HALF_E_GAMMA,
    SIEVE_CEILING,
    VALUE_CEILING,
)
from .core.types import OffsetTuple, PolynomialFamily
from .exceptions import (
    ConfigurationError,
    DomainError,
    HeuristicsError,
    ParseError,
    PolynomialOverflowError,
    SieveRangeError,
    ValidationError,
)
from .operations.bateman_horn import bateman_horn_summary
from .operations.constellations import (
    conditional_dependency_ratio,
    empirical_conditional_ratio,
    singular_series,
    twin_constant_closed_form,
)
from .operations.density_report import (
    dependency_trend_report,
    errors_nonincreasing,
    run_comparison,
)
from .sieve.table import PrimeTable, build_table
from .utils.output import (
    ReportSection,
    comparison_section,
    render,
    trend_section,
)
from .utils.parsing import (
    parse_int_list,
    parse_offset_tuple,
    parse_polynomial,
    parse_scientific_int,
)

logger = logging.getLogger(__name__)

T = TypeVar("T")

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_USAGE = 2
EXIT_RANGE = 3
EXIT_OVERFLOW = 4
EXIT_DOMAIN = 5

EXIT_CODES: tuple[tuple[type[HeuristicsError], int], ...] = (
    (ConfigurationError, EXIT_USAGE),
    (ParseError, EXIT_USAGE),
    (ValidationError, EXIT_USAGE),
    (SieveRangeError, EXIT_RANGE),
    (PolynomialOverflowError, EXIT_OVERFLOW),
    (DomainError, EXIT_DOMAIN),
)

LOG_FORMAT = "time=%(asctime)s level=%(levelname)s logger=%(name)s msg=%(message)s"

DEFAULT_XMAX = 10**6
REPORT_XMAX = 10**8
REPORT_POLY_XMAX = 10**6
TREND_CHECKPOINTS = (10**4, 10**6, 10**8, 10**10, 10**12)

# Families whose values run past this are tested value by value above it.
VALUE_SIEVE_CAP = 10**8


def exit_code_for(error: HeuristicsError) -> int:
    """Map an exception to its documented exit code."""
    for error_type, code in EXIT_CODES:
        if isinstance(error, error_type):
            return code
    return EXIT_UNEXPECTED


def configure_logging(verbose: bool = False, quiet: bool = False) -> None:
    """Send key=value log lines to stderr."""
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


def _argument(parse: Callable[[str], T]) -> Callable[[str], T]:
    """Adapt a spec parser so argparse reports its errors as usage errors."""

    def convert(text: str) -> T:
        try:
            return parse(text)
        except (ParseError, ValidationError) as e:
            raise argparse.ArgumentTypeError(str(e)) from e

    convert.__name__ = parse.__name__
    return convert


def default_checkpoints(xmax: int) -> list[int]:
    """Get powers of 10 from 10 up to xmax, plus xmax itself."""
    checkpoints = []
    power = 10
    while power <= xmax:
        checkpoints.append(power)
        power *= 10
    if not checkpoints or checkpoints[-1] != xmax:
        checkpoints.append(xmax)
    return checkpoints


def _resolve_checkpoints(args: argparse.Namespace, default_xmax: int) -> list[int]:
    if args.checkpoints:
        return sorted(set(args.checkpoints))
    return default_checkpoints(args.xmax if args.xmax is not None else default_xmax)


def resolve_config(
    args: argparse.Namespace, checkpoints: list[int], needed_limit: int
) -> RunConfig:
    """Build the RunConfig, deriving sieve and truncation limits from need.

    Raises:
        ConfigurationError: If the resulting limits are inconsistent
    """
    if args.sieve_limit is not None:
        sieve_limit = args.sieve_limit
    else:
        wanted_plimit = args.plimit if args.plimit is not None else DEFAULT_TRUNCATION_LIMIT
        sieve_limit = max(needed_limit, wanted_plimit, 2)

    if args.plimit is not None:
        truncation_limit = args.plimit
    else:
        truncation_limit = min(DEFAULT_TRUNCATION_LIMIT, sieve_limit)

    config = RunConfig.build(
        sieve_limit=sieve_limit,
        truncation_limit=truncation_limit,
        checkpoints=checkpoints,
        output_format=args.format,
        output_path=args.out,
        threads=args.threads,
        segment_size=args.segment_size,
        brute_force_limit=args.brute_force_limit,
    )
    logger.debug("Resolved %r", config)
    return config


def _table(config: RunConfig) -> PrimeTable:
    return build_table(config.sieve_limit, config.sieve_config)


def _emit(text: str, path: Path | None) -> None:
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        path.write_text(text, encoding="utf-8", newline="")
        logger.info("Wrote report to %s", path)


def _tuple_section(
    tuple_: OffsetTuple, table: PrimeTable, config: RunConfig, checkpoints: list[int]
) -> ReportSection:
    series = singular_series(
        tuple_, table, config.truncation_limit, config.brute_force_limit
    )
    rows = run_comparison(
        tuple_,
        table,
        checkpoints,
        p_limit=config.truncation_limit,
        brute_force_limit=config.brute_force_limit,
        config=config.sieve_config,
        constant=series.constant,
    )
    constant = series.constant
    metadata = [
        ("tuple", str(tuple_)),
        ("k", tuple_.k),
        ("admissible", series.admissible),
        ("constant", constant.value),
        ("truncation", constant.truncation_limit),
        ("last_doubling_delta", constant.last_doubling_delta),
        ("vanishing_prime", constant.vanishing_prime or "none"),
    ]
    return comparison_section(f"tuple {tuple_}", rows, metadata)


def _family_section(
    family: PolynomialFamily,
    table: PrimeTable,
    config: RunConfig,
    checkpoints: list[int],
) -> ReportSection:
    summary = bateman_horn_summary(
        family, table, config.truncation_limit, config.brute_force_limit
    )
    rows = run_comparison(
        family,
        table,
        checkpoints,
        p_limit=config.truncation_limit,
        brute_force_limit=config.brute_force_limit,
        config=config.sieve_config,
        constant=summary.constant,
    )
    constant = summary.constant
    metadata = [
        ("family", summary.family),
        ("k", summary.k),
        ("H", summary.H),
        ("irreducibility", ",".join(summary.irreducibility)),
        ("constant", constant.value),
        ("truncation", constant.truncation_limit),
        ("last_doubling_delta", constant.last_doubling_delta),
        ("fixed_divisor", summary.fixed_divisor or "none"),
    ]
    return comparison_section(f"family {family}", rows, metadata)


def _trend(table: PrimeTable, checkpoints: Sequence[int]) -> ReportSection:
    rows = dependency_trend_report(table, checkpoints)
    metadata = [
        ("limit", HALF_E_GAMMA),
        ("errors_nonincreasing", errors_nonincreasing(rows)),
    ]
    return trend_section("dependency ratio", rows, metadata)


def cmd_mertens_ratio(args: argparse.Namespace) -> int:
    """Emit the dependency trend report for the given checkpoints."""
    checkpoints = sorted(set(args.checkpoints))
    needed = math.isqrt(max(checkpoints)) if checkpoints else 2
    if needed > SIEVE_CEILING:
        raise SieveRangeError(
            f"Checkpoint {max(checkpoints)} needs primes up to {needed}, "
            f"beyond the sieve ceiling {SIEVE_CEILING}"
        )

    if args.sieve_limit is None and args.plimit is None:
        args.plimit = max(needed, 2)
    config = resolve_config(args, checkpoints, needed)

    table = _table(config)
    section = _trend(table, config.checkpoints)
    _emit(render([section], config.output_format), config.output_path)
    return EXIT_OK


def cmd_tuple(args: argparse.Namespace) -> int:
    """Emit the singular series summary and comparison rows for a tuple."""
    tuple_: OffsetTuple = args.spec
    checkpoints = _resolve_checkpoints(args, DEFAULT_XMAX)
    config = resolve_config(args, checkpoints, checkpoints[-1] + tuple_.max_offset)

    table = _table(config)
    section = _tuple_section(tuple_, table, config, config.checkpoints)
    _emit(render([section], config.output_format), config.output_path)
    return EXIT_OK


def cmd_bh(args: argparse.Namespace) -> int:
    """Emit the Bateman-Horn constant, H, fixed-divisor flag and rows."""
    family = PolynomialFamily(tuple(args.polys), args.assume_irreducible)
    checkpoints = _resolve_checkpoints(args, DEFAULT_XMAX)

    bound = family.value_bound(checkpoints[-1])
    if bound > VALUE_CEILING:
        raise PolynomialOverflowError(
            f"{family} may reach {bound} below x={checkpoints[-1]}, "
            f"beyond the ceiling {VALUE_CEILING}"
        )
    config = resolve_config(args, checkpoints, min(bound, VALUE_SIEVE_CAP))

    table = _table(config)
    section = _family_section(family, table, config, config.checkpoints)
    _emit(render([section], config.output_format), config.output_path)
    return EXIT_OK


def _conditional_section(table: PrimeTable, config: RunConfig, x: int) -> ReportSection:
    twin = OffsetTuple.twin()
    constant = twin_constant_closed_form(table, config.truncation_limit)
    record = (
        x,
        empirical_conditional_ratio(table, x, config.sieve_config),
        conditional_dependency_ratio(
            table, twin, x, config.brute_force_limit, config.sieve_config
        ),
        constant.value,
        HALF_E_GAMMA,
    )
    return ReportSection(
        "conditional dependency",
        ("x", "empirical_ratio", "conditional_ratio", "twin_constant", "half_e_gamma"),
        [record],
    )


def cmd_report(args: argparse.Namespace) -> int:
    """Run the canned verification suite."""
    xmax = args.xmax if args.xmax is not None else REPORT_XMAX
    checkpoints = default_checkpoints(xmax)
    poly_checkpoints = [x for x in checkpoints if x <= REPORT_POLY_XMAX]
    config = resolve_config(args, checkpoints, xmax + 4)
    table = _table(config)

    trend_checkpoints = [x for x in TREND_CHECKPOINTS if math.isqrt(x) <= table.limit]
    sections = [
        _trend(table, trend_checkpoints),
        _tuple_section(OffsetTuple.twin(), table, config, checkpoints),
        _tuple_section(OffsetTuple((0, 2, 4)), table, config, checkpoints),
        _family_section(
            PolynomialFamily.from_offsets(OffsetTuple.twin()), table, config, checkpoints
        ),
        _family_section(
            PolynomialFamily((parse_polynomial("x^2+1"),)), table, config, poly_checkpoints
        ),
        _conditional_section(table, config, xmax),
    ]
    _emit(render(sections, config.output_format), config.output_path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subparser per command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=["csv", "json", "text"], default="text", help="Output format"
    )
    common.add_argument("--out", type=Path, default=None, help="Write the report to PATH")
    common.add_argument("--threads", type=int, default=1, help="Worker threads")
    common.add_argument(
        "--plimit",
        type=_argument(parse_scientific_int),
        default=None,
        help="Truncation bound for prime products (default min(sieve limit, 1e6))",
    )
    common.add_argument(
        "--sieve-limit",
        type=_argument(parse_scientific_int),
        default=None,
        help="Sieve bound (default derived from the largest checkpoint)",
    )
    common.add_argument(
        "--segment-size",
        type=_argument(parse_scientific_int),
        default=DEFAULT_SEGMENT_SIZE,
        help="Odd flags per sieve segment, a multiple of 8",
    )
    common.add_argument(
        "--brute-force-limit",
        type=_argument(parse_scientific_int),
        default=DEFAULT_BRUTE_FORCE_LIMIT,
        help="Largest prime whose residue count is brute forced",
    )
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="Warnings only")

    parser = argparse.ArgumentParser(
        prog="prime-heuristics",
        description="Mertens products, singular series and Bateman-Horn constants "
        "checked against sieve counts.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    mertens = commands.add_parser(
        "mertens-ratio", parents=[common], help="Dependency ratio C1(x) at checkpoints"
    )
    mertens.add_argument(
        "--checkpoints", type=_argument(parse_int_list), required=True, help="e.g. 1e4,1e8"
    )
    mertens.set_defaults(handler=cmd_mertens_ratio)

    tuple_parser = commands.add_parser(
        "tuple", parents=[common], help="Singular series and counts for an offset tuple"
    )
    tuple_parser.add_argument("spec", type=_argument(parse_offset_tuple), help="e.g. 0,2,6")
    tuple_parser.add_argument("--xmax", type=_argument(parse_scientific_int), default=None)
    tuple_parser.add_argument("--checkpoints", type=_argument(parse_int_list), default=None)
    tuple_parser.set_defaults(handler=cmd_tuple)

    bh = commands.add_parser(
        "bh", parents=[common], help="Bateman-Horn constant for a polynomial family"
    )
    bh.add_argument("polys", nargs="+", type=_argument(parse_polynomial), help='e.g. "x^2+1"')
    bh.add_argument("--xmax", type=_argument(parse_scientific_int), default=None)
    bh.add_argument("--checkpoints", type=_argument(parse_int_list), default=None)
    bh.add_argument(
        "--assume-irreducible",
        action="store_true",
        help="Treat degree >= 4 polynomials as irreducible",
    )
    bh.set_defaults(handler=cmd_bh)

    report = commands.add_parser("report", parents=[common], help="Canned verification suite")
    report.add_argument("--xmax", type=_argument(parse_scientific_int), default=None)
    report.set_defaults(handler=cmd_report)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    configure_logging(args.verbose, args.quiet)
    try:
        code: int = args.handler(args)
        return code
    except HeuristicsError as e:
        logger.error("%s: %s", type(e).__name__, e)
        return exit_code_for(e)
    except Exception:
        logger.exception("Unexpected error")
        return EXIT_UNEXPECTED

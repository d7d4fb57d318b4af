import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from hypertope_extensions import __version__
from hypertope_extensions.catalog.families import catalog_rows, format_catalog
from hypertope_extensions.config import (
    DEFAULT_CENTRAL_BOUND,
    DEFAULT_COSET_LIMIT,
    DEFAULT_GEOMETRY_BOUND,
    DEFAULT_INTERSECTION_BOUND,
    DEFAULT_INTERSECTION_ORDER_BOUND,
    Limits,
)
from hypertope_extensions.flags import Family, L3Strategy, Level, Which
from hypertope_extensions.jobs import (
    Job,
    export_presentation,
    run_job,
    run_suite,
    suite_jobs,
)
from hypertope_extensions.report import Report

logger = logging.getLogger(__name__)

LEVELS = [str(level) for level in Level]


def _add_job_arguments(parser: argparse.ArgumentParser, level: str) -> None:
    parser.add_argument(
        "--family",
        required=True,
        choices=[str(family) for family in Family],
        help="Polytope family of the base",
    )
    parser.add_argument("--p", type=int, help="Parameter of the polygon family")
    parser.add_argument(
        "--n", type=int, help="Rank parameter of the orthoplex and cube families"
    )
    parser.add_argument(
        "--s", type=int, default=2, help="Order parameter of G(s) (default: 2)"
    )
    parser.add_argument(
        "--level",
        choices=LEVELS,
        default=level,
        help=f"Verification level, levels nest (default: {level})",
    )
    parser.add_argument(
        "--l3-strategy",
        choices=[str(strategy) for strategy in L3Strategy],
        default=str(L3Strategy.TRIVIAL),
        help="Subgroup used by the presentation order certificate",
    )
    parser.add_argument(
        "--coset-limit",
        type=int,
        default=DEFAULT_COSET_LIMIT,
        help="Maximum number of cosets defined by an enumeration",
    )
    parser.add_argument(
        "--geometry-bound",
        type=int,
        default=DEFAULT_GEOMETRY_BOUND,
        help="Largest group order for exhaustive geometry checks",
    )
    parser.add_argument(
        "--intersection-bound",
        type=int,
        default=DEFAULT_INTERSECTION_BOUND,
        help="Node limit of the subgroup intersection search",
    )
    parser.add_argument(
        "--intersection-order-bound",
        type=int,
        default=DEFAULT_INTERSECTION_ORDER_BOUND,
        help="Largest group order for the intersection property check",
    )
    parser.add_argument(
        "--central-bound",
        type=int,
        default=DEFAULT_CENTRAL_BOUND,
        help="Largest vertex count for the central symmetry check",
    )
    parser.add_argument(
        "--timings",
        action="store_true",
        help="Add wall-clock timings to the report",
    )
    parser.add_argument("--json", type=Path, help="Write the report to this path")


def add_arguments(parser: argparse.ArgumentParser) -> None:
    """Add command-line arguments."""
    parser.description = "Hypertope Extensions"

    parser.add_argument(
        "-v",
        "--version",
        action="version",
        version=f"Hypertope Extensions {__version__}",
        help="Show the version and exit",
    )
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default="INFO",
        help="Set the logging level",
    )

    commands = parser.add_subparsers(dest="command", required=True)

    catalog = commands.add_parser("catalog", help="Catalogued base polytopes")
    catalog.add_argument("action", choices=["list"])
    catalog.add_argument("--max-n", type=int, default=6)
    catalog.add_argument("--max-p", type=int, default=8)

    build = commands.add_parser("build", help="Build and certify an extension")
    _add_job_arguments(build, str(Level.ORDERS))

    halve = commands.add_parser("halve", help="Build and certify a halving")
    _add_job_arguments(halve, str(Level.ORDERS))
    halve.add_argument(
        "--out", type=Path, help="Also export the halved presentation here"
    )

    verify = commands.add_parser("verify", help="Run verification levels")
    _add_job_arguments(verify, str(Level.GEOMETRY))

    export = commands.add_parser("export", help="Export a presentation")
    _add_job_arguments(export, str(Level.ORDERS))
    export.add_argument(
        "--which",
        choices=[str(which) for which in Which],
        default=str(Which.EXTENSION),
    )
    export.add_argument("--out", type=Path, required=True)

    suite = commands.add_parser("suite", help="Run the acceptance suite")
    suite.add_argument("--out", type=Path, default=Path("reports"))
    suite.add_argument("--workers", type=int, default=1)
    suite.add_argument("--include-stretch", action="store_true")
    suite.add_argument("--timings", action="store_true")


def job_from_args(args: argparse.Namespace) -> Job:
    limits = Limits(
        coset_limit=args.coset_limit,
        geometry_bound=args.geometry_bound,
        intersection_bound=args.intersection_bound,
        central_bound=args.central_bound,
        intersection_order_bound=args.intersection_order_bound,
    )
    return Job.create(
        args.family,
        args.s,
        p=args.p,
        n=args.n,
        level=Level.from_name(args.level),
        limits=limits,
        strategy=L3Strategy(args.l3_strategy),
        timings=args.timings,
    )


def _emit(report: Report, path: Optional[Path]) -> None:
    payload = report.to_json()
    if path is None:
        sys.stdout.write(payload)
    else:
        path.write_text(payload, encoding="utf-8")
        logger.info("Wrote report to %s", path)


def main(argv: Optional[Sequence[str]] = None) -> None:
    parser = argparse.ArgumentParser()
    add_arguments(parser)
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )

    if args.command == "catalog":
        rows = catalog_rows(max_n=args.max_n, max_p=args.max_p)
        sys.stdout.write(format_catalog(rows) + "\n")
        return

    if args.command == "suite":
        jobs = suite_jobs(include_stretch=args.include_stretch, timings=args.timings)
        summary = run_suite(jobs, args.out, workers=args.workers)
        if summary.fatal:
            sys.exit(1)
        return

    try:
        job = job_from_args(args)
    except ValueError as error:
        parser.error(str(error))

    if args.command == "export":
        export_presentation(job, Which(args.which), args.out)
        return

    report = run_job(job)
    _emit(report, args.json)
    if args.command == "halve" and args.out is not None and not report.fatal:
        export_presentation(job, Which.HALVING, args.out)
    if report.fatal:
        sys.exit(1)


if __name__ == "__main__":  # pragma: no cover
    main()

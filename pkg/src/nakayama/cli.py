"""Command line entry point: ``nakayama {analyze,cartan,retract,oracle,census}``."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .census import CHECKS, CensusConfig, default_jobs, report_json, verify_all
from .kupisch import KupischError
from .report import analyze, census_text, format_text

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_USAGE = 2

_SECTIONS = {
    "analyze": {},
    "cartan": {"cartan": True},
    "retract": {"retract": True},
    "oracle": {"oracle": True},
}


def _dump(report: dict, fmt: str) -> str:
    if fmt == "text":
        return format_text(report)
    return json.dumps(report, separators=(",", ":"))


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["text", "structured", "json"], default="text",
                   help="structured (= json) prints one JSON document per line")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nakayama",
        description="Homological decisions for connected Nakayama algebras from their admissible sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _SECTIONS:
        p = sub.add_parser(name, help=f"{name} a single admissible sequence")
        p.add_argument("series", nargs="*", help="c1,c2,...,cn (commas and/or spaces)")
        p.add_argument("--file", help="read one sequence per line; one report per line")
        if name == "analyze":
            p.add_argument("--oracle", action="store_true", help="add brute-force dimensions")
            p.add_argument("--cartan", action="store_true", help="add Cartan matrix, determinant, Smith form")
            p.add_argument("--retract", action="store_true", help="add the retraction chain")
        _add_format(p)

    c = sub.add_parser("census", help="verify all claims on every small algebra")
    c.add_argument("--n-min", type=int, default=1)
    c.add_argument("--n-max", type=int, default=6)
    c.add_argument("--c-max", type=int, default=9)
    c.add_argument("--checks", default="all",
                   help="comma-separated check names, or 'all' (default); see --list-checks")
    c.add_argument("--list-checks", action="store_true")
    c.add_argument("--jobs", type=int, default=None, help="worker processes (default $ANALYZER_JOBS or 1)")
    c.add_argument("--budget", type=int, default=200_000,
                   help="search budget for the nonnegative-solution enumeration")
    c.add_argument("--no-timing", action="store_true", help="omit elapsed time (byte-stable output)")
    _add_format(c)
    return parser


def _run_single(args, out, err) -> int:
    flags = dict(_SECTIONS[args.command])
    if args.command == "analyze":
        flags = {"oracle": args.oracle, "cartan": args.cartan, "retract": args.retract}
    if args.file:
        with open(args.file) as fh:
            texts = [line.strip() for line in fh]
        texts = [t for t in texts if t and not t.startswith("#")]
    elif args.series:
        texts = [" ".join(args.series)]
    else:
        err.write("error: give a sequence or --file\n")
        return EXIT_USAGE
    status = EXIT_OK
    for text in texts:
        try:
            report = analyze(text, **flags)
        except KupischError as exc:
            err.write(f"error: {text!r}: {exc}\n")
            status = EXIT_USAGE
            continue
        out.write(_dump(report, args.format) + "\n")
    return status


def _run_census(args, out, err) -> int:
    if args.list_checks:
        out.write("\n".join(CHECKS) + "\n")
        return EXIT_OK
    names = tuple(CHECKS) if args.checks == "all" else tuple(x for x in args.checks.split(",") if x)
    try:
        config = CensusConfig(n_min=args.n_min, n_max=args.n_max, c_max=args.c_max, checks=names, budget=args.budget)
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    jobs = args.jobs if args.jobs is not None else default_jobs()
    if jobs < 1:
        err.write("error: --jobs must be at least 1\n")
        return EXIT_USAGE
    report = verify_all(config, jobs=jobs)
    if args.format == "text":
        if args.no_timing:
            report.pop("elapsed_seconds")
        out.write(census_text(report) + "\n")
    else:
        out.write(report_json(report, timing=not args.no_timing) + "\n")
    return EXIT_OK if report["failures"] == 0 else EXIT_FAILURES


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    if args.command == "census":
        return _run_census(args, out, err)
    return _run_single(args, out, err)


if __name__ == "__main__":
    sys.exit(main())

"""Command line entry point: ``g2forge analyze|battery|catalog``."""

from __future__ import annotations

import argparse
import os
import sys

from .g2core import NotAG2FormError
from .liegeom import InvalidAlgebraError
from .report import FORMATS, battery_report, build_report, emit_report
from .spec_io import SpecError, catalog_names, catalog_spec, load_spec
from .torsion import InternalConsistencyError

EXIT_OK = 0
EXIT_FAILED = 2
EXIT_INVALID = 3
EXIT_INTERNAL = 4

FORMAT_ENV = "G2FORGE_FORMAT"


def _add_report_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=("exact", "float"), default="exact")
    p.add_argument("--tol", type=float, default=1e-9, help="tolerance on residual norms in float mode")
    p.add_argument("--format", choices=FORMATS, default=None, help=f"output format (default ${FORMAT_ENV} or json)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="g2forge", description="Exact G2 characteristic-connection verifier.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for a structure file")
    p.add_argument("file")
    _add_report_flags(p)

    p = sub.add_parser("battery", help="identity ledger only")
    p.add_argument("file")
    _add_report_flags(p)

    cat = sub.add_parser("catalog", help="built-in examples")
    csub = cat.add_subparsers(dest="catalog_command", required=True)
    csub.add_parser("list")
    p = csub.add_parser("run")
    p.add_argument("name")
    _add_report_flags(p)
    return parser


def _format(args) -> str:
    fmt = args.format or os.environ.get(FORMAT_ENV) or "json"
    if fmt not in FORMATS:
        raise SpecError([("", f"unknown format {fmt!r} in ${FORMAT_ENV}")])
    return fmt


def _run(args) -> int:
    if args.command == "catalog" and args.catalog_command == "list":
        for name in catalog_names():
            print(name)
        return EXIT_OK
    fmt = _format(args)
    if args.command == "catalog":
        try:
            spec = catalog_spec(args.name)
        except KeyError as exc:
            print(exc.args[0], file=sys.stderr)
            return EXIT_INVALID
    else:
        try:
            spec = load_spec(args.file)
        except OSError as exc:
            print(f"cannot read {args.file}: {exc.strerror}", file=sys.stderr)
            return EXIT_INVALID
    if args.command == "battery":
        report = battery_report(spec, args.mode, args.tol)
    else:
        report = build_report(spec, args.mode, args.tol)
    sys.stdout.buffer.write(emit_report(report, fmt))
    sys.stdout.flush()
    return EXIT_OK if report["verdict"] == "pass" else EXIT_FAILED


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except SpecError as exc:
        for ptr, msg in exc.errors:
            print(f"error: {ptr or '/'}: {msg}", file=sys.stderr)
        return EXIT_INVALID
    except (InvalidAlgebraError, NotAG2FormError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InternalConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

from __future__ import annotations

import argparse
import asyncio
import logging
import sys
from importlib.metadata import PackageNotFoundError, version

from graphzip.cli import output as out
from graphzip.cli.base import EXIT_RUNTIME, EXIT_USAGE
from graphzip.cli.commands import COMMAND_GROUPS, TOP_LEVEL_COMMANDS
from graphzip.exceptions import CoderConfigError, GraphZipError

_HEADLINE = "Lossless compression of graph structure, and MDL model selection"

_EPILOG = (
    "examples:\n"
    "  graphzip compress road.txt --coder triangle --class 2\n"
    "  graphzip decompress road.gzt -o road-structure.txt\n"
    "  graphzip train corpus/ --coder common-neighbor\n"
    "  graphzip benchmark corpus/ --specs all --csv table.csv\n"
    '  graphzip generate graph "ws(1000, 20, 0.1)" --seed 1 -o ws.txt\n'
    "  graphzip select samples.csv --coder iid --class 2 -o report.json\n"
)


def _version() -> str:
    try:
        return version("graphzip")
    except PackageNotFoundError:
        return "unknown"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphzip",
        description=_HEADLINE,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=_EPILOG,
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"%(prog)s {_version()}",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="Show detailed progress logs (solver sweeps, per-task status)",
    )
    sub = parser.add_subparsers(dest="command", title="commands")

    for cmd_class in TOP_LEVEL_COMMANDS:
        cmd_class().register(sub)

    for group_class in COMMAND_GROUPS:
        group_class().register(sub)

    return parser


def main(argv: list[str] | None = None) -> None:
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.verbose:
        logging.basicConfig(level=logging.INFO, format="  %(name)s: %(message)s")

    if not hasattr(args, "func") or args.func is None:
        parser.print_help()
        return

    try:
        asyncio.run(args.func(args))
    except KeyboardInterrupt:
        print()
    except CoderConfigError as exc:
        out.error(str(exc))
        sys.exit(EXIT_USAGE)
    except (GraphZipError, OSError) as exc:
        out.error(str(exc))
        sys.exit(EXIT_RUNTIME)

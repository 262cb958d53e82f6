from __future__ import annotations

import argparse
import hashlib
import sys
from abc import ABC, abstractmethod
from pathlib import Path
from typing import TYPE_CHECKING, ClassVar, NoReturn

from graphzip.cli import output as out
from graphzip.cli.config import load_config

if TYPE_CHECKING:
    from graphzip.cli.config import Config
    from graphzip.coders.spec import CoderSpec
    from graphzip.coders.stats import CoderStats
    from graphzip.graph.core import Graph

EXIT_RUNTIME = 1
EXIT_USAGE = 2

_CORPUS_SUFFIXES = frozenset({".txt", ".edges", ".edgelist", ".el", ".tsv", ".csv"})


# ── Guard functions ───────────────────────────────────────────────────────────


def usage_error(message: str) -> NoReturn:
    out.error(message)
    sys.exit(EXIT_USAGE)


def runtime_error(message: str) -> NoReturn:
    out.error(message)
    sys.exit(EXIT_RUNTIME)


def require_file(path: Path) -> Path:
    if not path.is_file():
        runtime_error(f"File not found: {path}")
    return path


# ── Argument helpers ──────────────────────────────────────────────────────────


def add_coder_args(parser: argparse.ArgumentParser) -> None:
    """Add ``--coder``, ``--class``, ``--mode`` and ``--stats-file``."""
    parser.add_argument(
        "--coder",
        default="iid",
        help="Model family: iid, triangle, common-neighbor, four-motif "
        "(default: iid)",
    )
    parser.add_argument(
        "--class",
        dest="klass",
        type=int,
        choices=(1, 2),
        default=1,
        help="Coder class (default: 1)",
    )
    parser.add_argument(
        "--mode",
        choices=("learned", "universal"),
        default="universal",
        help="Parameter mode (default: universal)",
    )
    parser.add_argument(
        "--stats-file",
        type=Path,
        default=None,
        help="Trained statistics for learned mode "
        "(default: <data-dir>/stats/<family>.json)",
    )


def spec_from_args(args: argparse.Namespace) -> CoderSpec:
    from graphzip.coders.spec import CoderSpec
    from graphzip.exceptions import CoderConfigError

    try:
        return CoderSpec.parse(f"{args.coder}/{args.klass}/{args.mode}")
    except CoderConfigError as exc:
        usage_error(str(exc))


def parse_specs(text: str) -> list[CoderSpec]:
    """Comma-separated ``family/class/mode`` list, or ``all`` / ``all-learned``."""
    from graphzip.coders.spec import CoderSpec, Mode, all_specs
    from graphzip.exceptions import CoderConfigError

    match text.strip().lower():
        case "all":
            return all_specs(Mode.UNIVERSAL)
        case "all-learned":
            return all_specs(Mode.LEARNED)
    try:
        return [CoderSpec.parse(part) for part in text.split(",") if part.strip()]
    except CoderConfigError as exc:
        usage_error(str(exc))


def stats_for(
    spec: CoderSpec, cfg: Config, stats_file: Path | None = None
) -> CoderStats | None:
    """Trained statistics for a learned *spec*, or ``None`` in universal mode."""
    from graphzip.coders.spec import Mode
    from graphzip.coders.stats import load_stats
    from graphzip.exceptions import CoderConfigError

    if spec.mode is not Mode.LEARNED:
        return None
    path = stats_file or cfg.stats_path(spec)
    if not path.is_file():
        usage_error(
            f"{spec.label} needs trained statistics; none found at {path}. "
            f"Run 'graphzip train' first or pass --stats-file."
        )
    try:
        stats = load_stats(path)
    except CoderConfigError as exc:
        usage_error(str(exc))
    if stats.family is not spec.family:
        usage_error(f"{path} holds {stats.family} statistics, not {spec.family}")
    return stats


def read_input_graph(path: Path, *, largest: bool = False) -> Graph:
    from graphzip.graph.core import largest_component
    from graphzip.graph.io import read_graph

    g = read_graph(require_file(path))
    return largest_component(g) if largest else g


def corpus_files(paths: list[Path]) -> list[Path]:
    """Expand directories into their edge-list files, sorted by name."""
    files: list[Path] = []
    for path in paths:
        if path.is_dir():
            files.extend(
                sorted(
                    p
                    for p in path.iterdir()
                    if p.is_file() and p.suffix.lower() in _CORPUS_SUFFIXES
                )
            )
        elif path.is_file():
            files.append(path)
        else:
            runtime_error(f"File not found: {path}")
    return files


def digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()[:16]


def write_text(path: Path | None, text: str) -> None:
    """Write *text* to *path*, or stdout when no path is given."""
    if path is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


# ── Base command classes ──────────────────────────────────────────────────────


class BaseCommand(ABC):
    """Base class for all CLI commands.

    Subclasses set ``name``, ``help``, and optionally ``description``.
    ``register()`` wires the command into an argparse subparsers action.
    ``execute()`` is the coroutine that runs when the command is invoked.
    """

    name: ClassVar[str]
    help: ClassVar[str] = ""
    description: ClassVar[str] = ""

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:  # noqa: B027
        """Override to add arguments to the command's parser."""

    @abstractmethod
    async def execute(self, args: argparse.Namespace) -> None:
        """Entry point called by main()."""

    def register(self, sub: argparse._SubParsersAction) -> argparse.ArgumentParser:  # type: ignore[type-arg]
        """Add this command to *sub* and bind ``args.func`` to ``self.execute``."""
        p = sub.add_parser(
            self.name,
            help=self.help,
            description=self.description or None,
        )
        self.add_arguments(p)
        p.set_defaults(func=self.execute)
        return p


class ConfiguredCommand(BaseCommand, ABC):
    """Command that runs against the loaded :class:`Config`.

    Execution flow::

        load_config()
            → _prepare(cfg, args)   ← override to add checks / mutate cfg
            → await run(cfg, args)
    """

    async def execute(self, args: argparse.Namespace) -> None:
        cfg = load_config()
        cfg = self._prepare(cfg, args)
        await self.run(cfg, args)

    def _prepare(self, cfg: Config, args: argparse.Namespace) -> Config:
        """Pre-flight hook. Return (possibly mutated) cfg."""
        threads = getattr(args, "threads", None)
        if threads is not None:
            if threads < 1:
                usage_error(f"--threads must be at least 1, got {threads}")
            cfg.threads = threads
        return cfg

    @abstractmethod
    async def run(self, cfg: Config, args: argparse.Namespace) -> None:
        """Override with the command's actual logic."""


# ── Command group ─────────────────────────────────────────────────────────────


class CommandGroup:
    """A named container of :class:`BaseCommand` subclasses.

    ``register()`` adds the group parser and registers each subcommand. When
    invoked without a subcommand, the group parser prints its own help.
    """

    name: ClassVar[str]
    help: ClassVar[str] = ""
    description: ClassVar[str] = ""
    subcommands: ClassVar[list[type[BaseCommand]]]

    def register(self, sub: argparse._SubParsersAction) -> None:  # type: ignore[type-arg]
        p = sub.add_parser(
            self.name,
            help=self.help,
            description=self.description or None,
        )

        async def _show_help(_args: argparse.Namespace) -> None:
            p.print_help()

        p.set_defaults(func=_show_help)
        group_sub = p.add_subparsers(title=f"{self.name} commands")
        for cmd_class in self.subcommands:
            cmd_class().register(group_sub)

from __future__ import annotations

import argparse
from pathlib import Path
from typing import TYPE_CHECKING

from graphzip.cli import output as out
from graphzip.cli.base import (
    ConfiguredCommand,
    corpus_files,
    read_input_graph,
    usage_error,
)

if TYPE_CHECKING:
    from graphzip.cli.config import Config


class TrainCommand(ConfiguredCommand):
    name = "train"
    help = "Learn coder statistics from a corpus of edge lists"
    description = (
        "Average the coder's bucket probabilities and degree histogram over "
        "a training corpus. The result serves both coder classes of a family."
    )

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            "corpus", nargs="+", type=Path, help="Edge-list files or directories"
        )
        parser.add_argument("--coder", default="iid", help="Model family")
        parser.add_argument(
            "--class", dest="klass", type=int, choices=(1, 2), default=1
        )
        parser.add_argument(
            "-o",
            "--out",
            type=Path,
            default=None,
            help="Statistics file (default: <data-dir>/stats/<family>.json)",
        )
        parser.add_argument("--seed", type=int, default=None)
        parser.add_argument("--largest-component", action="store_true")

    async def run(self, cfg: Config, args: argparse.Namespace) -> None:
        from graphzip.coders.spec import CoderSpec
        from graphzip.coders.stats import save_stats
        from graphzip.coders.training import train_stats
        from graphzip.exceptions import CoderConfigError
        from graphzip.tree.transform import RandomPicker

        try:
            spec = CoderSpec.parse(f"{args.coder}/{args.klass}/learned")
        except CoderConfigError as exc:
            usage_error(str(exc))
        files = corpus_files(args.corpus)
        if not files:
            usage_error("The training corpus is empty.")

        graphs = [read_input_graph(f, largest=args.largest_component) for f in files]
        picker = RandomPicker(args.seed) if args.seed is not None else None
        stats = train_stats(graphs, spec, picker=picker)

        target = args.out or cfg.stats_path(spec)
        target.parent.mkdir(parents=True, exist_ok=True)
        save_stats(target, stats)

        out.header(f"Trained {spec.family} statistics")
        out.kv("Graphs", len(graphs))
        out.kv("Mean vertices", f"{stats.mean_n:,.1f}")
        out.kv("Buckets", len(stats.probabilities))
        out.success(f"Saved to {target}")
        print()
        out.next_step(
            f"graphzip compress GRAPH --coder {spec.family} --mode learned "
            f"--stats-file {target}",
            "compress with these statistics",
        )

from __future__ import annotations

import argparse
from pathlib import Path
from typing import TYPE_CHECKING

from graphzip.cli import output as out
from graphzip.cli.base import (
    ConfiguredCommand,
    corpus_files,
    parse_specs,
    read_input_graph,
    stats_for,
    usage_error,
    write_text,
)

if TYPE_CHECKING:
    from graphzip.cli.config import Config
    from graphzip.coders.spec import CoderSpec
    from graphzip.coders.stats import CoderStats
    from graphzip.types import BenchmarkRow


class BenchmarkCommand(ConfiguredCommand):
    name = "benchmark"
    help = "Tabulate total bits per graph and coder"
    description = (
        "Compress every corpus graph with every requested coder and report "
        "one row per graph and one column per coder, next to the analytic "
        "labeled-graph baseline."
    )

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            "corpus", nargs="+", type=Path, help="Edge-list files or directories"
        )
        parser.add_argument(
            "--specs",
            default="all",
            help="Comma-separated family/class/mode list, 'all' or 'all-learned' "
            "(default: all)",
        )
        parser.add_argument(
            "--stats-file",
            type=Path,
            action="append",
            default=[],
            help="Trained statistics for learned specs (repeatable; defaults "
            "to <data-dir>/stats/<family>.json)",
        )
        parser.add_argument("--csv", type=Path, default=None, help="Write CSV here")
        parser.add_argument("--json", type=Path, default=None, help="Write JSON here")
        parser.add_argument("--threads", type=int, default=None)
        parser.add_argument("--largest-component", action="store_true")

    async def run(self, cfg: Config, args: argparse.Namespace) -> None:
        from graphzip.coders.stats import load_stats
        from graphzip.concurrency import map_in_threads
        from graphzip.types import BenchmarkTable

        specs = parse_specs(args.specs)
        if not specs:
            usage_error("No coder specs given.")
        files = corpus_files(args.corpus)
        if not files:
            usage_error("The benchmark corpus is empty.")

        explicit = {s.family: s for s in (load_stats(p) for p in args.stats_file)}
        stats: dict[CoderSpec, CoderStats | None] = {
            spec: explicit.get(spec.family) or stats_for(spec, cfg) for spec in specs
        }

        tasks = [(str(i), f.name) for i, f in enumerate(files)]
        with out.create_reporter(tasks) as reporter:

            def on_done(index: int, row: BenchmarkRow) -> None:
                best = min(row.bits.values())
                reporter.update(
                    str(index), out.TaskState.DONE, detail=f"best {best:,} bits"
                )

            def measure_file(path: Path) -> BenchmarkRow:
                return _measure_row(
                    path, specs, stats, largest=args.largest_component
                )

            rows = await map_in_threads(
                measure_file, files, limit=cfg.threads, on_done=on_done
            )

        table = BenchmarkTable(specs=[s.label for s in specs], rows=rows)
        out.print_table(
            "Total bits",
            ["graph", "n", "edges", "labeled iid", *table.specs],
            [
                [
                    r.graph,
                    f"{r.n:,}",
                    f"{r.edges:,}",
                    f"{r.labeled_iid_bits:,.0f}",
                    *(f"{r.bits[s]:,}" for s in table.specs),
                ]
                for r in table.rows
            ],
        )
        if args.csv is not None:
            write_text(args.csv, table.to_csv())
            out.success(f"CSV written to {args.csv}")
        if args.json is not None:
            write_text(args.json, table.model_dump_json(indent=2))
            out.success(f"JSON written to {args.json}")


def _measure_row(
    path: Path,
    specs: list[CoderSpec],
    stats: dict[CoderSpec, CoderStats | None],
    *,
    largest: bool,
) -> BenchmarkRow:
    from graphzip.coders.codec import encode_graph, labeled_iid_bits
    from graphzip.types import BenchmarkRow

    g = read_input_graph(path, largest=largest)
    bits = {
        spec.label: encode_graph(g, spec, stats[spec]).bit_length for spec in specs
    }
    return BenchmarkRow(
        graph=path.name,
        n=g.n,
        edges=g.edge_count,
        labeled_iid_bits=labeled_iid_bits(g),
        bits=bits,
    )

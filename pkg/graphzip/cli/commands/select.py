from __future__ import annotations

import argparse
import asyncio
from pathlib import Path
from typing import TYPE_CHECKING

from graphzip.cli import output as out
from graphzip.cli.base import (
    ConfiguredCommand,
    add_coder_args,
    parse_specs,
    read_input_graph,
    require_file,
    spec_from_args,
    stats_for,
    usage_error,
    write_text,
)

if TYPE_CHECKING:
    from graphzip.cli.config import Config


def _add_grid_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--lambda-min",
        type=float,
        default=None,
        help="Smallest lambda (default: 0.01 when N > p, else 0.1)",
    )
    parser.add_argument("--lambda-max", type=float, default=1.0)
    parser.add_argument("--lambda-step", type=float, default=0.01)


def _add_solver_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--threads", type=int, default=None)
    parser.add_argument(
        "--completion",
        choices=("regression", "ipf"),
        default="regression",
        help="Covariance completion solver (default: regression)",
    )
    parser.add_argument(
        "--warmup",
        type=int,
        default=None,
        help="Samples coded under the default distribution "
        "(default: min(2p, ceil(N/4)))",
    )


def _grid(args: argparse.Namespace, n_samples: int, p: int) -> list[float]:
    from graphzip.exceptions import CoderConfigError
    from graphzip.mdl.selection import lambda_grid

    start = args.lambda_min
    if start is None:
        start = 0.01 if n_samples > p else 0.1
    try:
        return lambda_grid(start, args.lambda_max, args.lambda_step)
    except CoderConfigError as exc:
        usage_error(str(exc))


class SelectCommand(ConfiguredCommand):
    name = "select"
    help = "Pick a Gaussian graphical model by minimum description length"
    description = (
        "Run the graphical lasso over a lambda grid, charge each resulting "
        "graph its compressed size plus the predictive description length of "
        "the data, and report the cheapest."
    )

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            "data", type=Path, help="CSV or whitespace matrix, one sample per row"
        )
        _add_grid_args(parser)
        add_coder_args(parser)
        _add_solver_args(parser)
        parser.add_argument(
            "--truth",
            type=Path,
            default=None,
            help="True graph as an edge list; adds the F1 score to the report",
        )
        parser.add_argument(
            "-o", "--out", type=Path, default=None, help="JSON report path"
        )

    async def run(self, cfg: Config, args: argparse.Namespace) -> None:
        from graphzip.mdl.completion import CompletionMethod
        from graphzip.mdl.gaussian import load_matrix
        from graphzip.mdl.selection import select_model

        X = load_matrix(require_file(args.data).read_text(encoding="utf-8"))
        n_samples, p = X.shape
        grid = _grid(args, n_samples, p)
        spec = spec_from_args(args)
        stats = stats_for(spec, cfg, args.stats_file)
        truth = read_input_graph(args.truth) if args.truth is not None else None
        options = cfg.selection_options(
            completion=CompletionMethod(args.completion), warmup=args.warmup
        )

        out.info(f"Fitting {len(grid)} lambda values on {n_samples} x {p} data")
        selection = await asyncio.to_thread(
            select_model, X, grid, spec, stats, options
        )
        report = selection.to_report(truth)

        out.print_table(
            f"Description length ({spec.label})",
            ["lambda", "edges", "L(G)", "L(D|G)", "total", "status"],
            [
                [
                    f"{r.lam:.2f}",
                    "-" if r.edges is None else r.edges,
                    "-" if r.graph_bits is None else f"{r.graph_bits:,}",
                    "-" if r.data_bits is None else f"{r.data_bits:,.1f}",
                    "-" if r.total_bits is None else f"{r.total_bits:,.1f}",
                    r.status,
                ]
                for r in report.path
            ],
        )
        out.kv("Selected lambda", f"{report.selected_lambda:.4f}")
        out.kv("Edges", len(report.selected_edges))
        if any(r.shrunk for r in report.path):
            out.warn("Early covariance estimates were shrunk to stay positive definite")
        if report.f1 is not None:
            out.kv("F1", f"{report.f1:.3f}")
        write_text(args.out, report.model_dump_json(indent=2))


class ExperimentCommand(ConfiguredCommand):
    name = "experiment"
    help = "Monte-Carlo F1 of model selection on synthetic Gaussian data"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            "family", choices=("cycle", "ar1", "er", "hub"), help="Precision structure"
        )
        parser.add_argument("--p", type=int, default=30, help="Variables")
        parser.add_argument("--n", type=int, default=60, help="Samples per trial")
        parser.add_argument("--trials", type=int, default=10)
        parser.add_argument("--seed", type=int, default=0)
        parser.add_argument(
            "--specs", default="all", help="Comma-separated coder specs or 'all'"
        )
        _add_grid_args(parser)
        _add_solver_args(parser)
        parser.add_argument(
            "-o", "--out", type=Path, default=None, help="JSON report path"
        )

    async def run(self, cfg: Config, args: argparse.Namespace) -> None:
        from graphzip.mdl.completion import CompletionMethod
        from graphzip.mdl.precision import PrecisionFamily
        from graphzip.mdl.selection import run_experiment

        if args.trials < 1:
            usage_error(f"--trials must be positive, got {args.trials}")
        specs = parse_specs(args.specs)
        stats = [s for s in (stats_for(spec, cfg) for spec in specs) if s is not None]
        grid = _grid(args, args.n, args.p)
        options = cfg.selection_options(
            completion=CompletionMethod(args.completion), warmup=args.warmup
        )

        tasks = [(str(t), f"trial {t + 1}") for t in range(args.trials)]
        with out.create_reporter(tasks) as reporter:

            def on_trial(trial: int, scores: dict[str, float]) -> None:
                best = max(scores.values())
                reporter.update(str(trial), out.TaskState.DONE, detail=f"F1 {best:.3f}")

            report = await asyncio.to_thread(
                run_experiment,
                PrecisionFamily(args.family),
                args.p,
                args.n,
                args.trials,
                specs,
                grid,
                args.seed,
                stats=stats,
                options=options,
                on_trial=on_trial,
            )

        out.print_table(
            f"Mean F1, {args.family} p={args.p} N={args.n}, {args.trials} trials",
            ["coder", "F1"],
            [
                *([label, f"{f1:.3f}"] for label, f1 in report.mean_f1.items()),
                ["optimum", f"{report.optimum_f1:.3f}"],
            ],
        )
        if args.out is not None:
            write_text(args.out, report.model_dump_json(indent=2))
            out.success(f"Report written to {args.out}")

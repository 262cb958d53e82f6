from __future__ import annotations

import argparse
import io
from pathlib import Path

from graphzip.cli import output as out
from graphzip.cli.base import BaseCommand, CommandGroup, usage_error, write_text


class GenerateGraphCommand(BaseCommand):
    name = "graph"
    help = "Draw a random graph: er(n,p), ba(n,m), ws(n,k,beta), empty(n)..."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("model", help='Graph model, e.g. "ws(1000, 20, 0.1)"')
        parser.add_argument("--seed", type=int, default=None)
        parser.add_argument(
            "-o", "--out", type=Path, default=None, help="Edge list (default: stdout)"
        )

    async def execute(self, args: argparse.Namespace) -> None:
        from graphzip.exceptions import GraphDomainError
        from graphzip.graph.generators import generate, parse_model
        from graphzip.graph.io import write_edge_list

        try:
            g = generate(parse_model(args.model), seed=args.seed)
        except GraphDomainError as exc:
            usage_error(str(exc))
        write_text(args.out, write_edge_list(g))
        if args.out is not None:
            out.success(f"{g.n:,} vertices, {g.edge_count:,} edges → {args.out}")


class GenerateGaussianCommand(BaseCommand):
    name = "gaussian"
    help = "Sample zero-mean Gaussian data with a structured precision matrix"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("family", choices=("cycle", "ar1", "er", "hub"))
        parser.add_argument("--p", type=int, required=True, help="Variables")
        parser.add_argument("--n", type=int, required=True, help="Samples")
        parser.add_argument("--seed", type=int, default=None)
        parser.add_argument(
            "-o", "--out", type=Path, default=None, help="CSV matrix (default: stdout)"
        )
        parser.add_argument(
            "--truth-out",
            type=Path,
            default=None,
            help="Also write the true conditional-independence graph here",
        )

    async def execute(self, args: argparse.Namespace) -> None:
        import numpy as np

        from graphzip.exceptions import GraphDomainError
        from graphzip.graph.io import write_edge_list
        from graphzip.mdl.gaussian import sample_gaussian
        from graphzip.mdl.precision import (
            PrecisionFamily,
            PrecisionSpec,
            generate_precision,
            true_graph,
        )

        if args.n < 1:
            usage_error(f"--n must be positive, got {args.n}")
        try:
            omega = generate_precision(
                PrecisionSpec(PrecisionFamily(args.family), args.p, args.seed)
            )
        except GraphDomainError as exc:
            usage_error(str(exc))
        X = sample_gaussian(omega, args.n, args.seed)

        buffer = io.StringIO()
        np.savetxt(buffer, X, delimiter=",", fmt="%.10g")
        write_text(args.out, buffer.getvalue())
        if args.truth_out is not None:
            write_text(args.truth_out, write_edge_list(true_graph(omega)))
        if args.out is not None:
            out.success(f"{args.n} x {args.p} samples → {args.out}")


class GenerateGroup(CommandGroup):
    name = "generate"
    help = "graph · gaussian: synthetic inputs"
    subcommands = [
        GenerateGraphCommand,
        GenerateGaussianCommand,
    ]

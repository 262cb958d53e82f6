from __future__ import annotations

import argparse
import shlex
import sys
import time
from pathlib import Path
from typing import TYPE_CHECKING

from graphzip.cli import output as out
from graphzip.cli.base import (
    ConfiguredCommand,
    add_coder_args,
    digest,
    read_input_graph,
    require_file,
    spec_from_args,
    stats_for,
    write_text,
)

if TYPE_CHECKING:
    from graphzip.cli.config import Config

BITSTREAM_SUFFIX = ".gzt"


def _command_echo() -> list[str]:
    return ["graphzip", *sys.argv[1:]]


class CompressCommand(ConfiguredCommand):
    name = "compress"
    help = "Compress an edge list into a graph-structure bitstream"
    description = (
        "Encode the structure of an undirected graph (vertex labels are "
        "discarded). Learned mode reads trained statistics written by "
        "'graphzip train'."
    )

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("input", type=Path, help="Edge-list file")
        parser.add_argument(
            "-o",
            "--out",
            type=Path,
            default=None,
            help=f"Output bitstream (default: <input>{BITSTREAM_SUFFIX})",
        )
        add_coder_args(parser)
        parser.add_argument(
            "--best",
            action="store_true",
            help="Try every universal coder and keep the shortest stream",
        )
        parser.add_argument(
            "--seed",
            type=int,
            default=None,
            help="Pick vertices at random with this seed instead of by index",
        )
        parser.add_argument(
            "--largest-component",
            action="store_true",
            help="Keep only the largest connected component",
        )
        parser.add_argument(
            "--report", type=Path, default=None, help="Write a JSON run report"
        )

    async def run(self, cfg: Config, args: argparse.Namespace) -> None:
        from graphzip.coders.codec import encode_best, encode_graph, labeled_iid_bits
        from graphzip.coders.spec import all_specs
        from graphzip.tree.transform import RandomPicker
        from graphzip.types import RunItem, RunReport

        g = read_input_graph(args.input, largest=args.largest_component)
        picker = RandomPicker(args.seed) if args.seed is not None else None

        start = time.perf_counter()
        if args.best:
            stream = encode_best(g, all_specs(), picker=picker)
        else:
            spec = spec_from_args(args)
            stats = stats_for(spec, cfg, args.stats_file)
            stream = encode_graph(g, spec, stats, picker=picker)
        seconds = time.perf_counter() - start

        target = args.out or args.input.with_suffix(BITSTREAM_SUFFIX)
        data = stream.to_bytes()
        target.write_bytes(data)

        out.header(f"Compressed {args.input.name}")
        out.kv("Vertices", f"{g.n:,}")
        out.kv("Edges", f"{g.edge_count:,}")
        out.kv("Coder", stream.spec.label)
        out.kv("Header bits", f"{stream.header_bits:,}")
        out.kv("Payload bits", f"{stream.payload_bits:,}")
        out.kv("Total bits", f"{stream.bit_length:,}")
        out.kv("Labeled iid bits", f"{labeled_iid_bits(g):,.0f}")
        out.success(f"Wrote {len(data):,} bytes to {target}")

        if args.report is not None:
            report = RunReport(
                command=_command_echo(),
                items=[
                    RunItem(
                        name=str(args.input),
                        coder=stream.spec.label,
                        n=g.n,
                        edges=g.edge_count,
                        total_bits=stream.bit_length,
                        header_bits=stream.header_bits,
                        payload_bits=stream.payload_bits,
                        seconds=seconds,
                        digest=digest(data),
                    )
                ],
            )
            write_text(args.report, report.model_dump_json(indent=2))


class DecompressCommand(ConfiguredCommand):
    name = "decompress"
    help = "Decode a bitstream back into an edge list"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("input", type=Path, help="Bitstream written by compress")
        parser.add_argument(
            "-o",
            "--out",
            type=Path,
            default=None,
            help="Output edge list (default: stdout)",
        )

    async def run(self, cfg: Config, args: argparse.Namespace) -> None:
        from graphzip.coders.codec import Bitstream, decode_graph
        from graphzip.graph.io import write_edge_list

        data = require_file(args.input).read_bytes()
        stream = Bitstream.from_bytes(data)
        g = decode_graph(stream)
        write_text(args.out, write_edge_list(g))
        if args.out is not None:
            out.success(
                f"Decoded {stream.spec.label} stream: {g.n:,} vertices, "
                f"{g.edge_count:,} edges → {shlex.quote(str(args.out))}"
            )

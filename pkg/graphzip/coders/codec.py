"""Bitstream framing and the public encode / decode / measure entry points.

Layout, most significant bit first::

    "GZT1"            32 bits
    coder id           8 bits  (family << 4 | class)
    mode               8 bits
    n                  Elias-delta
    side information   mode dependent, see below
    payload length     Elias-delta of (payload bits + 1)
    payload            arithmetic-coded tree, then zero padding to a byte

Side information:

* learned: Elias-delta bucket count ``B``, ``B`` 32-bit fixed-point
  probabilities, and for class 2 Elias-delta ``L + 1`` followed by ``L``
  Elias-delta codes of ``round(16 * count) + 1`` for the degree histogram;
* universal class 1 IID: Elias-delta ``|E| + 1``;
* universal class 2: the degree histogram's rank among weak compositions of
  ``n`` into ``n`` parts, in a fixed number of bits;
* universal class 1 with another family: nothing (KT estimation).
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from graphzip.coders.engine import DegreeModel, TreeCoder
from graphzip.coders.parameters import FixedParameters, KtParameters, ParameterSource
from graphzip.coders.registry import get_family
from graphzip.coders.spec import CoderClass, CoderSpec, Family, Mode
from graphzip.coders.stats import CoderStats
from graphzip.entropy.bits import BitReader, BitWriter
from graphzip.entropy.channel import DecodeChannel, EncodeChannel
from graphzip.entropy.integers import (
    composition_rank_width,
    decode_positive_integer,
    encode_positive_integer,
    rank_weak_composition,
    unrank_weak_composition,
)
from graphzip.exceptions import (
    BitstreamDecodeError,
    CoderConfigError,
    EmptyGraphError,
)
from graphzip.graph.core import Graph, degree_histogram
from graphzip.tree.nodes import CardinalityTree
from graphzip.tree.transform import VertexPicker, graph_to_tree, tree_to_graph

logger = logging.getLogger(__name__)

MAGIC = b"GZT1"
FIXED_POINT_BITS = 32
HISTOGRAM_SCALE = 16


@dataclass(frozen=True, slots=True)
class Bitstream:
    """A complete encoded graph; ``data`` is exactly what goes to disk."""

    spec: CoderSpec
    n: int
    header_bits: int
    payload_bits: int
    data: bytes

    @property
    def bit_length(self) -> int:
        return self.header_bits + self.payload_bits

    def to_bytes(self) -> bytes:
        return self.data

    @classmethod
    def from_bytes(cls, data: bytes) -> Bitstream:
        header = _read_header(data)
        return cls(
            spec=header.spec,
            n=header.n,
            header_bits=header.header_bits,
            payload_bits=header.payload_bits,
            data=data,
        )


@dataclass(frozen=True, slots=True)
class CodeLength:
    spec: CoderSpec
    header_bits: int
    payload_bits: int
    ideal_payload_bits: float

    @property
    def total_bits(self) -> int:
        return self.header_bits + self.payload_bits


@dataclass(frozen=True, slots=True)
class _SideInfo:
    stats: CoderStats | None = None
    edge_count: int | None = None
    degree_counts: tuple[int, ...] | None = None


@dataclass(frozen=True, slots=True)
class _Header:
    spec: CoderSpec
    n: int
    side: _SideInfo
    header_bits: int
    payload_bits: int


# Fixed-point quantization shared by the writer and the reader.


def _to_fixed(p: float) -> int:
    scale = 1 << FIXED_POINT_BITS
    return min(max(round(p * scale), 1), scale - 1)


def _from_fixed(q: int) -> float:
    return q / (1 << FIXED_POINT_BITS)


def _quantize(stats: CoderStats) -> CoderStats:
    return stats.model_copy(
        update={
            "probabilities": tuple(
                _from_fixed(_to_fixed(p)) for p in stats.probabilities
            ),
            "degree_hist": tuple(
                round(c * HISTOGRAM_SCALE) / HISTOGRAM_SCALE for c in stats.degree_hist
            ),
        }
    )


def _edge_density(n: int, edge_count: int) -> float:
    pairs = n * (n - 1) // 2
    return edge_count / pairs if pairs else 0.5


def _side_info(g: Graph, spec: CoderSpec, stats: CoderStats | None) -> _SideInfo:
    if spec.mode is Mode.LEARNED:
        if stats is None:
            raise CoderConfigError(f"{spec.label} needs learned statistics")
        if stats.family is not spec.family:
            raise CoderConfigError(
                f"statistics were trained for {stats.family}, not {spec.family}"
            )
        if spec.klass is CoderClass.TWO and not stats.degree_hist:
            raise CoderConfigError("class 2 coding needs a degree histogram")
        return _SideInfo(stats=_quantize(stats))
    if spec.klass is CoderClass.TWO:
        return _SideInfo(degree_counts=tuple(degree_histogram(g).counts))
    if spec.family is Family.IID:
        return _SideInfo(edge_count=g.edge_count)
    return _SideInfo()


def _write_side_info(
    out: BitWriter, spec: CoderSpec, n: int, side: _SideInfo
) -> None:
    """Mode-specific fields between the vertex count and the payload length.

    The degree-histogram rank is written in ``composition_rank_width(n, n)``
    bits; the width depends only on ``n``, which the decoder already has, so
    it carries no length prefix. Learned probabilities are fixed point and
    the remaining counts are Elias-delta coded.
    """
    if side.stats is not None:
        stats = side.stats
        encode_positive_integer(len(stats.probabilities), out)
        for p in stats.probabilities:
            out.write_uint(_to_fixed(p), FIXED_POINT_BITS)
        if spec.klass is CoderClass.TWO:
            encode_positive_integer(len(stats.degree_hist) + 1, out)
            for count in stats.degree_hist:
                encode_positive_integer(round(count * HISTOGRAM_SCALE) + 1, out)
    elif side.degree_counts is not None:
        rank = rank_weak_composition(side.degree_counts)
        out.write_uint(rank, composition_rank_width(n, n))
    elif side.edge_count is not None:
        encode_positive_integer(side.edge_count + 1, out)


def _read_side_info(source: BitReader, spec: CoderSpec, n: int) -> _SideInfo:
    if spec.mode is Mode.LEARNED:
        count = decode_positive_integer(source)
        probabilities = []
        for _ in range(count):
            q = source.read_uint(FIXED_POINT_BITS)
            if q == 0:
                raise BitstreamDecodeError("zero probability in statistics block")
            probabilities.append(_from_fixed(q))
        histogram: list[float] = []
        if spec.klass is CoderClass.TWO:
            length = decode_positive_integer(source) - 1
            histogram = [
                (decode_positive_integer(source) - 1) / HISTOGRAM_SCALE
                for _ in range(length)
            ]
        try:
            stats = CoderStats(
                family=spec.family,
                probabilities=tuple(probabilities),
                degree_hist=tuple(histogram),
            )
        except ValueError as exc:
            raise BitstreamDecodeError(f"invalid statistics block: {exc}") from exc
        return _SideInfo(stats=stats)
    if spec.klass is CoderClass.TWO:
        rank = source.read_uint(composition_rank_width(n, n))
        counts = unrank_weak_composition(rank, n, n)
        if sum(k * c for k, c in enumerate(counts)) % 2:
            raise BitstreamDecodeError("degree histogram has an odd degree sum")
        return _SideInfo(degree_counts=tuple(counts))
    if spec.family is Family.IID:
        edge_count = decode_positive_integer(source) - 1
        if edge_count > n * (n - 1) // 2:
            raise BitstreamDecodeError(f"{edge_count} edges cannot fit {n} vertices")
        return _SideInfo(edge_count=edge_count)
    return _SideInfo()


def _build_coder(spec: CoderSpec, n: int, side: _SideInfo) -> TreeCoder:
    params: ParameterSource
    degrees: DegreeModel | None = None
    if side.stats is not None:
        params = FixedParameters(side.stats.probabilities)
        if spec.klass is CoderClass.TWO:
            degrees = DegreeModel.smoothed(side.stats.degree_hist, n)
    else:
        if spec.family is Family.IID:
            # Class 2 with one bucket conditions on the level sum only.
            density = _edge_density(n, side.edge_count or 0)
            params = FixedParameters([density])
        else:
            params = KtParameters(per_node=spec.klass is CoderClass.ONE)
        if spec.klass is CoderClass.TWO:
            assert side.degree_counts is not None
            degrees = DegreeModel.from_counts(side.degree_counts, n)
    return TreeCoder(get_family(spec.family), spec.klass, params, degrees)


def _write_prefix(out: BitWriter, spec: CoderSpec, n: int) -> None:
    out.write_uint(int.from_bytes(MAGIC, "big"), 8 * len(MAGIC))
    out.write_uint(spec.coder_id, 8)
    out.write_uint(spec.mode_id, 8)
    encode_positive_integer(n, out)


def _read_header(data: bytes) -> _Header:
    source = BitReader(data)
    if source.read_uint(8 * len(MAGIC)) != int.from_bytes(MAGIC, "big"):
        raise BitstreamDecodeError("not a graphzip stream (bad magic)")
    spec = CoderSpec.from_header(source.read_uint(8), source.read_uint(8))
    n = decode_positive_integer(source)
    side = _read_side_info(source, spec, n)
    payload_bits = decode_positive_integer(source) - 1
    header_bits = source.position
    total = header_bits + payload_bits
    if total > 8 * len(data):
        raise BitstreamDecodeError(
            f"truncated payload: need {total} bits, have {8 * len(data)}"
        )
    if len(data) != (total + 7) // 8:
        raise BitstreamDecodeError(
            f"{len(data) - (total + 7) // 8} unexpected trailing bytes"
        )
    return _Header(spec, n, side, header_bits, payload_bits)


def _encode(
    g: Graph,
    spec: CoderSpec,
    stats: CoderStats | None,
    picker: VertexPicker | None,
) -> tuple[Bitstream, float]:
    if g.n < 1:
        raise EmptyGraphError("cannot encode a graph with no vertices")
    side = _side_info(g, spec, stats)
    tree, _ = graph_to_tree(g, picker)

    out = BitWriter()
    _write_prefix(out, spec, g.n)
    _write_side_info(out, spec, g.n, side)

    channel = EncodeChannel()
    _build_coder(spec, g.n, side).run(g.n, channel, tree)
    channel.finish()
    payload = channel.out

    encode_positive_integer(payload.bit_length + 1, out)
    header_bits = out.bit_length
    out.extend(payload)
    stream = Bitstream(
        spec=spec,
        n=g.n,
        header_bits=header_bits,
        payload_bits=payload.bit_length,
        data=out.getvalue(),
    )
    logger.debug(
        "%s: n=%d header=%d payload=%d ideal=%.1f",
        spec.label,
        g.n,
        header_bits,
        payload.bit_length,
        channel.ideal_bits,
    )
    return stream, channel.ideal_bits


def encode_graph(
    g: Graph,
    spec: CoderSpec,
    stats: CoderStats | None = None,
    *,
    picker: VertexPicker | None = None,
) -> Bitstream:
    """Encode *g* with *spec*; learned mode requires *stats*."""
    return _encode(g, spec, stats, picker)[0]


def decode_tree(stream: Bitstream | bytes) -> CardinalityTree:
    data = stream.data if isinstance(stream, Bitstream) else stream
    header = _read_header(data)
    source = BitReader(
        data,
        start=header.header_bits,
        limit=header.header_bits + header.payload_bits,
    )
    coder = _build_coder(header.spec, header.n, header.side)
    return coder.run(header.n, DecodeChannel(source))


def decode_graph(stream: Bitstream | bytes) -> Graph:
    """Rebuild a graph isomorphic to the one that was encoded."""
    return tree_to_graph(decode_tree(stream))


def measure(
    g: Graph,
    spec: CoderSpec,
    stats: CoderStats | None = None,
    *,
    picker: VertexPicker | None = None,
) -> CodeLength:
    stream, ideal = _encode(g, spec, stats, picker)
    return CodeLength(
        spec=spec,
        header_bits=stream.header_bits,
        payload_bits=stream.payload_bits,
        ideal_payload_bits=ideal,
    )


def encode_best(
    g: Graph,
    specs: Sequence[CoderSpec],
    stats: Iterable[CoderStats] = (),
    *,
    picker: VertexPicker | None = None,
) -> Bitstream:
    """Encode with every spec and keep the shortest stream (first on ties).

    *stats* supplies learned statistics by family; learned specs without a
    match are rejected.
    """
    if not specs:
        raise CoderConfigError("encode_best needs at least one coder spec")
    by_family = {s.family: s for s in stats}
    best: Bitstream | None = None
    for spec in specs:
        learned = by_family.get(spec.family) if spec.mode is Mode.LEARNED else None
        stream = encode_graph(g, spec, learned, picker=picker)
        if best is None or stream.bit_length < best.bit_length:
            best = stream
    assert best is not None
    logger.info("best coder %s at %d bits", best.spec.label, best.bit_length)
    return best


def labeled_iid_bits(g: Graph) -> float:
    """``C(n,2) * H(|E| / C(n,2))``: the cost of coding *g* with its labels."""
    pairs = g.n * (g.n - 1) // 2
    if pairs == 0 or g.edge_count in (0, pairs):
        return 0.0
    p = g.edge_count / pairs
    return pairs * -(p * math.log2(p) + (1 - p) * math.log2(1 - p))

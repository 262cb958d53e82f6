from __future__ import annotations

import math

import pytest

from graphzip.coders.codec import (
    MAGIC,
    Bitstream,
    decode_graph,
    encode_best,
    encode_graph,
    labeled_iid_bits,
    measure,
)
from graphzip.coders.spec import CoderClass, CoderSpec, Family, Mode, all_specs
from graphzip.coders.stats import CoderStats
from graphzip.coders.training import train_stats
from graphzip.entropy.integers import composition_rank_width, elias_delta_length
from graphzip.exceptions import BitstreamDecodeError, CoderConfigError, EmptyGraphError
from graphzip.graph import core
from graphzip.graph.generators import ErdosRenyi, generate
from graphzip.graph.isomorphism import is_isomorphic_small
from graphzip.testing import training_graphs
from graphzip.tree.transform import RandomPicker

# magic, coder id and mode
PREFIX_BITS = 32 + 8 + 8

IID_1 = CoderSpec(Family.IID, CoderClass.ONE, Mode.UNIVERSAL)
IID_2 = CoderSpec(Family.IID, CoderClass.TWO, Mode.UNIVERSAL)


class TestHeader:
    def test_magic_and_ids(self) -> None:
        spec = CoderSpec(Family.TRIANGLE, CoderClass.TWO, Mode.UNIVERSAL)
        data = encode_graph(core.cycle(5), spec).to_bytes()
        assert data[:4] == MAGIC
        assert data[4] == spec.coder_id
        assert data[5] == spec.mode_id

    def test_edge_count_side_information(self) -> None:
        g = core.path(9)
        stream = encode_graph(g, IID_1)
        expected = (
            PREFIX_BITS
            + elias_delta_length(9)
            + elias_delta_length(g.edge_count + 1)
            + elias_delta_length(stream.payload_bits + 1)
        )
        assert stream.header_bits == expected

    @pytest.mark.parametrize(("n", "width"), [(1, 0), (3, 4)])
    def test_degree_histogram_side_information(self, n: int, width: int) -> None:
        assert composition_rank_width(n, n) == width
        stream = encode_graph(core.complete(n), IID_2)
        expected = (
            PREFIX_BITS
            + elias_delta_length(n)
            + width
            + elias_delta_length(stream.payload_bits + 1)
        )
        assert stream.header_bits == expected

    def test_kt_coders_send_no_side_information(self) -> None:
        spec = CoderSpec(Family.COMMON_NEIGHBOR, CoderClass.ONE, Mode.UNIVERSAL)
        stream = encode_graph(core.star(6), spec)
        expected = (
            PREFIX_BITS
            + elias_delta_length(6)
            + elias_delta_length(stream.payload_bits + 1)
        )
        assert stream.header_bits == expected


class TestDecodeErrors:
    @pytest.fixture()
    def data(self) -> bytes:
        return encode_graph(generate(ErdosRenyi(20, 0.3), seed=2), IID_1).to_bytes()

    def test_bad_magic(self, data: bytes) -> None:
        with pytest.raises(BitstreamDecodeError, match="bad magic"):
            decode_graph(b"XXXX" + data[4:])

    def test_unknown_coder(self, data: bytes) -> None:
        with pytest.raises(BitstreamDecodeError, match="unknown coder id"):
            decode_graph(data[:4] + bytes([0x7F]) + data[5:])

    def test_truncated(self, data: bytes) -> None:
        with pytest.raises(BitstreamDecodeError):
            decode_graph(data[:-2])

    def test_trailing_bytes(self, data: bytes) -> None:
        with pytest.raises(BitstreamDecodeError, match="trailing"):
            Bitstream.from_bytes(data + b"\x00")

    def test_empty_input(self) -> None:
        with pytest.raises(BitstreamDecodeError):
            decode_graph(b"")


class TestEncodeGraph:
    def test_no_vertices(self) -> None:
        with pytest.raises(EmptyGraphError):
            encode_graph(core.empty(0), IID_1)

    def test_learned_needs_stats(self) -> None:
        spec = CoderSpec(Family.TRIANGLE, CoderClass.ONE, Mode.LEARNED)
        with pytest.raises(CoderConfigError, match="needs learned statistics"):
            encode_graph(core.path(4), spec)

    def test_learned_stats_must_match_family(self) -> None:
        spec = CoderSpec(Family.TRIANGLE, CoderClass.ONE, Mode.LEARNED)
        stats = CoderStats(family=Family.IID, probabilities=(0.3,))
        with pytest.raises(CoderConfigError, match="trained for iid"):
            encode_graph(core.path(4), spec, stats)

    def test_class_two_needs_histogram(self) -> None:
        spec = CoderSpec(Family.IID, CoderClass.TWO, Mode.LEARNED)
        stats = CoderStats(family=Family.IID, probabilities=(0.3,))
        with pytest.raises(CoderConfigError, match="degree histogram"):
            encode_graph(core.path(4), spec, stats)

    def test_forced_triangle_costs_almost_nothing(self) -> None:
        spec = CoderSpec(Family.IID, CoderClass.ONE, Mode.LEARNED)
        stats = CoderStats(family=Family.IID, probabilities=(1.0,))
        stream = encode_graph(core.complete(3), spec, stats)
        assert stream.payload_bits <= 2
        assert decode_graph(stream.to_bytes()).edge_count == 3

    def test_empty_graph(self) -> None:
        stream = encode_graph(core.empty(5), IID_1)
        assert stream.payload_bits < 10
        decoded = decode_graph(stream.to_bytes())
        assert (decoded.n, decoded.edge_count) == (5, 0)

    def test_single_vertex_has_no_payload(self) -> None:
        for spec in all_specs():
            stream = encode_graph(core.empty(1), spec)
            assert stream.payload_bits == 0
            assert decode_graph(stream.to_bytes()).n == 1

    def test_random_picker_still_decodes(self) -> None:
        g = generate(ErdosRenyi(12, 0.4), seed=6)
        for spec in all_specs():
            stream = encode_graph(g, spec, picker=RandomPicker(seed=1))
            assert is_isomorphic_small(decode_graph(stream.to_bytes()), g)

    def test_learned_decoder_uses_quantized_stats(self) -> None:
        stats = train_stats(training_graphs(), CoderSpec.parse("cn/2/learned"))
        g = generate(ErdosRenyi(30, 0.2), seed=40)
        for klass in CoderClass:
            spec = CoderSpec(Family.COMMON_NEIGHBOR, klass, Mode.LEARNED)
            decoded = decode_graph(encode_graph(g, spec, stats).to_bytes())
            assert decoded.edge_count == g.edge_count


class TestErdosRenyiBounds:
    def test_iid_coder_between_labeled_and_unlabeled_cost(self) -> None:
        g = generate(ErdosRenyi(200, 0.05), seed=3)
        length = measure(g, IID_1)
        labeled = labeled_iid_bits(g)
        relabeling = math.lgamma(g.n + 1) / math.log(2)
        assert length.ideal_payload_bits <= labeled + 4
        assert length.ideal_payload_bits >= labeled - relabeling - 8
        assert length.payload_bits <= length.ideal_payload_bits + 32

    def test_labeled_cost_of_trivial_graphs(self) -> None:
        assert labeled_iid_bits(core.empty(5)) == 0.0
        assert labeled_iid_bits(core.complete(5)) == 0.0
        # Two of the three pairs are present.
        g = core.path(3)
        assert labeled_iid_bits(g) == pytest.approx(3 * 0.9182958340544896)


class TestEncodeBest:
    def test_keeps_the_shortest_stream(self) -> None:
        g = generate(ErdosRenyi(25, 0.3), seed=12)
        specs = all_specs()
        best = encode_best(g, specs)
        assert best.bit_length == min(measure(g, s).total_bits for s in specs)
        assert decode_graph(best.to_bytes()).edge_count == g.edge_count

    def test_learned_specs_pick_up_stats_by_family(self) -> None:
        spec = CoderSpec.parse("tri/1/learned")
        stats = train_stats(training_graphs(), spec)
        best = encode_best(core.cycle(9), [spec], [stats])
        assert best.spec == spec

    def test_learned_spec_without_stats(self) -> None:
        with pytest.raises(CoderConfigError):
            encode_best(core.cycle(9), [CoderSpec.parse("tri/1/learned")])

    def test_needs_a_spec(self) -> None:
        with pytest.raises(CoderConfigError):
            encode_best(core.cycle(9), [])


class TestCompleteGraphs:
    @pytest.mark.parametrize("klass", list(CoderClass))
    def test_triangle_never_costs_more_than_iid(self, klass: CoderClass) -> None:
        corpus = [core.complete(n) for n in (6, 9, 12)]
        g = core.complete(10)
        lengths = {}
        for family in (Family.IID, Family.TRIANGLE):
            spec = CoderSpec(family, klass, Mode.LEARNED)
            lengths[family] = measure(g, spec, train_stats(corpus, spec))
        tri, iid = lengths[Family.TRIANGLE], lengths[Family.IID]
        assert tri.ideal_payload_bits <= iid.ideal_payload_bits + 1e-9
        assert tri.payload_bits <= iid.payload_bits

from __future__ import annotations

import itertools
import math

import pytest

from graphzip.entropy.bits import BitReader, BitWriter
from graphzip.entropy.integers import (
    composition_count,
    composition_rank_width,
    decode_positive_integer,
    elias_delta_length,
    encode_positive_integer,
    rank_weak_composition,
    unrank_weak_composition,
)
from graphzip.exceptions import BitstreamDecodeError, GraphDomainError


class TestEliasDelta:
    def test_one_is_a_single_bit(self) -> None:
        out = BitWriter()
        assert encode_positive_integer(1, out) == 1
        assert out.bit_length == 1

    @pytest.mark.parametrize("value", [1, 2, 7, 17, 1000, 2**40 + 3])
    def test_decodes_back(self, value: int) -> None:
        out = BitWriter()
        length = encode_positive_integer(value, out)
        assert length == out.bit_length == elias_delta_length(value)
        assert decode_positive_integer(BitReader(out.getvalue())) == value

    def test_zero_is_rejected(self) -> None:
        with pytest.raises(GraphDomainError):
            encode_positive_integer(0, BitWriter())

    def test_truncated_codeword(self) -> None:
        out = BitWriter()
        encode_positive_integer(1000, out)
        reader = BitReader(out.getvalue(), limit=out.bit_length - 2)
        with pytest.raises(BitstreamDecodeError):
            decode_positive_integer(reader)


class TestWeakCompositions:
    def test_counts(self) -> None:
        assert composition_count(3, 3) == 10
        assert composition_count(0, 0) == 1
        assert composition_count(2, 0) == 0

    def test_rank_widths(self) -> None:
        assert composition_rank_width(1, 1) == 0
        assert composition_rank_width(3, 3) == 4
        assert composition_rank_width(2642, 2642) == (
            math.comb(5283, 2641) - 1
        ).bit_length()

    def test_rank_is_a_bijection(self) -> None:
        total, parts = 4, 3
        ranks = []
        for counts in itertools.product(range(total + 1), repeat=parts):
            if sum(counts) != total:
                continue
            rank = rank_weak_composition(counts)
            assert unrank_weak_composition(rank, total, parts) == list(counts)
            ranks.append(rank)
        assert sorted(ranks) == list(range(composition_count(total, parts)))

    def test_degree_histogram_shape(self) -> None:
        counts = [0, 4, 0, 0, 1]
        rank = rank_weak_composition(counts)
        assert unrank_weak_composition(rank, 5, 5) == counts

    def test_rank_out_of_range(self) -> None:
        with pytest.raises(BitstreamDecodeError):
            unrank_weak_composition(10, 3, 3)

from __future__ import annotations

import numpy as np
import pytest

from graphzip.entropy.arithmetic import ac_decode, ac_encode
from graphzip.entropy.bits import BitReader, BitWriter
from graphzip.entropy.channel import CostChannel, DecodeChannel, EncodeChannel
from graphzip.entropy.distributions import binomial_model, binomial_pmf
from graphzip.entropy.models import FREQUENCY_TOTAL, FrequencyModel
from graphzip.exceptions import BitstreamDecodeError, ContractViolation

# Termination plus quantization overhead of the coder.
SLACK_BITS = 32


class TestFrequencyModel:
    def test_floor_keeps_every_symbol_codable(self) -> None:
        model = FrequencyModel.from_probabilities([1.0, 0.0, float("nan")])
        assert model.size == 3
        assert model.probability(1) > 0
        assert model.total <= FREQUENCY_TOTAL

    def test_all_zero_weights_become_uniform(self) -> None:
        model = FrequencyModel.from_probabilities([0.0, 0.0])
        assert model.probability(0) == 0.5

    def test_offset_support(self) -> None:
        model = FrequencyModel.uniform(4, offset=3)
        assert model.bits(5) == pytest.approx(2.0)
        with pytest.raises(ValueError, match="outside support"):
            model.index_of(7)

    def test_deterministic_costs_nothing(self) -> None:
        assert FrequencyModel.deterministic(9).bits(9) == 0.0

    def test_bernoulli(self) -> None:
        model = FrequencyModel.bernoulli(0.25)
        assert model.probability(1) == pytest.approx(0.25, abs=1e-8)

    def test_empty_alphabet(self) -> None:
        with pytest.raises(ValueError):
            FrequencyModel.from_probabilities([])


class TestArithmeticCoder:
    def test_single_fair_symbol(self) -> None:
        payload, bits = ac_encode([(1, FrequencyModel.bernoulli(0.5))])
        assert 1 <= bits <= 1 + SLACK_BITS
        assert ac_decode(payload, [FrequencyModel.bernoulli(0.5)]) == [1]

    def test_only_deterministic_symbols_give_empty_payload(self) -> None:
        payload, bits = ac_encode([(0, binomial_model(0, 0.3))] * 5)
        assert (payload, bits) == (b"", 0)

    def test_fair_coins(self, rng: np.random.Generator) -> None:
        coin = FrequencyModel.bernoulli(0.5)
        symbols = rng.integers(0, 2, size=1000).tolist()
        payload, bits = ac_encode((s, coin) for s in symbols)
        assert abs(bits - 1000) <= SLACK_BITS
        assert ac_decode(payload, [coin] * 1000) == symbols

    def test_binomial_symbols_near_entropy(self, rng: np.random.Generator) -> None:
        model = binomial_model(10, 0.3)
        symbols = rng.binomial(10, 0.3, size=10_000).tolist()
        payload, bits = ac_encode((s, model) for s in symbols)
        ideal = sum(model.bits(s) for s in symbols)
        assert abs(bits - ideal) <= SLACK_BITS
        assert ac_decode(payload, [model] * len(symbols)) == symbols

        pmf = binomial_pmf(10, 0.3)
        entropy = float(-(pmf * np.log2(pmf)).sum())
        assert entropy == pytest.approx(2.567, abs=5e-3)
        expected = sum(float(pmf[k]) * model.bits(k) for k in range(11))
        assert expected == pytest.approx(entropy, rel=1e-3)

    def test_mixed_models_round_trip(self, rng: np.random.Generator) -> None:
        models = [binomial_model(int(n), 0.1 + 0.8 * rng.random()) for n in range(40)]
        symbols = [int(rng.integers(0, m.size)) for m in models]
        payload, _ = ac_encode(zip(symbols, models, strict=True))
        assert ac_decode(payload, models) == symbols


class TestChannels:
    def test_encode_decode_and_cost_agree(self) -> None:
        models = [
            binomial_model(6, 0.4),
            binomial_model(0, 0.4),
            binomial_model(3, 0.9),
        ]
        values = [2, 0, 3]
        enc = EncodeChannel()
        cost = CostChannel()
        for model, value in zip(models, values, strict=True):
            enc.code(model, value)
            cost.code(model, value)
        enc.finish()
        assert enc.symbols == cost.symbols == 2
        assert enc.ideal_bits == pytest.approx(cost.ideal_bits)

        dec = DecodeChannel(BitReader(enc.out.getvalue()))
        assert [dec.code(m) for m in models] == values

    def test_encoding_needs_a_value(self) -> None:
        with pytest.raises(ContractViolation):
            EncodeChannel().code(binomial_model(4, 0.5))


class TestBits:
    def test_uint_round_trip(self) -> None:
        out = BitWriter()
        out.write_uint(0b1011, 4)
        out.write_uint(300, 9)
        reader = BitReader(out.getvalue(), limit=out.bit_length)
        assert reader.read_uint(4) == 0b1011
        assert reader.read_uint(9) == 300
        assert reader.remaining == 0

    def test_value_too_wide(self) -> None:
        with pytest.raises(ValueError):
            BitWriter().write_uint(8, 3)

    def test_reading_past_the_end(self) -> None:
        reader = BitReader(b"\x80", limit=1)
        assert reader.read() == 1
        with pytest.raises(BitstreamDecodeError):
            reader.read()
        assert reader.read_or_zero() == 0

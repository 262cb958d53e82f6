"""Symbol channels: one coding loop drives encoding, decoding and costing.

The coders walk the tree once and call :meth:`SymbolChannel.code` for every
symbol. An encoding channel writes the given value, a decoding channel ignores
it and returns what the payload holds, and a cost channel only sums the
quantized ideal codelength. Single-symbol models are never sent.
"""

from __future__ import annotations

from abc import ABC, abstractmethod

from graphzip.entropy.arithmetic import ArithmeticDecoder, ArithmeticEncoder
from graphzip.entropy.bits import BitReader, BitWriter
from graphzip.entropy.models import FrequencyModel
from graphzip.exceptions import ContractViolation


class SymbolChannel(ABC):
    def __init__(self) -> None:
        self.ideal_bits = 0.0
        self.symbols = 0

    def code(self, model: FrequencyModel, value: int | None = None) -> int:
        """Send or receive one symbol under *model*; returns the symbol."""
        if model.size == 1:
            return model.offset
        symbol = self._code(model, value)
        self.ideal_bits += model.bits(symbol)
        self.symbols += 1
        return symbol

    @abstractmethod
    def _code(self, model: FrequencyModel, value: int | None) -> int: ...

    def finish(self) -> None:
        return None


def _require(value: int | None) -> int:
    if value is None:
        raise ContractViolation("an encoding channel needs the symbol value")
    return value


class EncodeChannel(SymbolChannel):
    """Arithmetic-codes symbols into :attr:`out`.

    The coder starts on the first non-deterministic symbol, so a stream with
    nothing to send stays empty.
    """

    def __init__(self, out: BitWriter | None = None) -> None:
        super().__init__()
        self.out = out or BitWriter()
        self._encoder: ArithmeticEncoder | None = None

    def _code(self, model: FrequencyModel, value: int | None) -> int:
        symbol = _require(value)
        if self._encoder is None:
            self._encoder = ArithmeticEncoder(self.out)
        self._encoder.write(model, symbol)
        return symbol

    def finish(self) -> None:
        if self._encoder is not None:
            self._encoder.finish()
            self._encoder = None


class DecodeChannel(SymbolChannel):
    def __init__(self, source: BitReader) -> None:
        super().__init__()
        self._source = source
        self._decoder: ArithmeticDecoder | None = None

    def _code(self, model: FrequencyModel, value: int | None) -> int:
        if self._decoder is None:
            self._decoder = ArithmeticDecoder(self._source)
        return self._decoder.read(model)


class CostChannel(SymbolChannel):
    """Accumulates ``-log2(freq / total)`` without producing bits."""

    def _code(self, model: FrequencyModel, value: int | None) -> int:
        symbol = _require(value)
        model.index_of(symbol)
        return symbol

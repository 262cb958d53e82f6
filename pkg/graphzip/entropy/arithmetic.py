"""Exact integer arithmetic coding.

A bigint port of the classic low/high range coder: ``STATE_SIZE``-bit state,
pending underflow bits, a single ``1`` bit to terminate, and end-of-stream
read as zeros on the decoding side.
"""

from __future__ import annotations

from collections.abc import Iterable

from graphzip.entropy.bits import BitReader, BitWriter
from graphzip.entropy.models import FrequencyModel
from graphzip.exceptions import BitstreamDecodeError

STATE_SIZE = 62
_FULL = 1 << STATE_SIZE
_MASK = _FULL - 1
_TOP = _FULL >> 1
_SECOND = _TOP >> 1
MAX_TOTAL = (_FULL >> 2) + 2


class _CoderBase:
    def __init__(self) -> None:
        self.low = 0
        self.high = _MASK

    def _update(self, model: FrequencyModel, index: int) -> None:
        total = model.total
        if total > MAX_TOTAL:
            raise ValueError(f"frequency total {total} exceeds {MAX_TOTAL}")
        span = self.high - self.low + 1
        sym_low, sym_high = model.bounds(index)
        if sym_low == sym_high:
            raise ValueError("symbol has zero frequency")
        self.high = self.low + sym_high * span // total - 1
        self.low = self.low + sym_low * span // total

        while ((self.low ^ self.high) & _TOP) == 0:
            self._shift()
            self.low = (self.low << 1) & _MASK
            self.high = ((self.high << 1) & _MASK) | 1
        while self.low & ~self.high & _SECOND:
            self._underflow()
            self.low = (self.low << 1) & (_MASK >> 1)
            self.high = ((self.high << 1) & (_MASK >> 1)) | _TOP | 1

    def _shift(self) -> None:
        raise NotImplementedError

    def _underflow(self) -> None:
        raise NotImplementedError


class ArithmeticEncoder(_CoderBase):
    def __init__(self, out: BitWriter) -> None:
        super().__init__()
        self._out = out
        self._pending = 0

    def write(self, model: FrequencyModel, symbol: int) -> None:
        self._update(model, model.index_of(symbol))

    def finish(self) -> None:
        self._out.write(1)

    def _shift(self) -> None:
        bit = self.low >> (STATE_SIZE - 1)
        self._out.write(bit)
        for _ in range(self._pending):
            self._out.write(bit ^ 1)
        self._pending = 0

    def _underflow(self) -> None:
        self._pending += 1


class ArithmeticDecoder(_CoderBase):
    def __init__(self, source: BitReader) -> None:
        super().__init__()
        self._in = source
        self.code = 0
        for _ in range(STATE_SIZE):
            self.code = (self.code << 1) | source.read_or_zero()

    def read(self, model: FrequencyModel) -> int:
        total = model.total
        span = self.high - self.low + 1
        offset = self.code - self.low
        value = ((offset + 1) * total - 1) // span
        if not 0 <= value < total:
            raise BitstreamDecodeError("arithmetic decoder state out of range")
        index = model.index_for_cumulative(value)
        self._update(model, index)
        if not self.low <= self.code <= self.high:
            raise BitstreamDecodeError("inconsistent renormalization; corrupt payload")
        return model.offset + index

    def _shift(self) -> None:
        self.code = ((self.code << 1) & _MASK) | self._in.read_or_zero()

    def _underflow(self) -> None:
        self.code = (
            (self.code & _TOP)
            | ((self.code << 1) & (_MASK >> 1))
            | self._in.read_or_zero()
        )


def ac_encode(symbols: Iterable[tuple[int, FrequencyModel]]) -> tuple[bytes, int]:
    """Encode ``(symbol, model)`` pairs; returns the payload and its bit length.

    Deterministic models are skipped; a stream with nothing to code is empty.
    """
    out = BitWriter()
    encoder: ArithmeticEncoder | None = None
    for symbol, model in symbols:
        if model.size == 1:
            continue
        if encoder is None:
            encoder = ArithmeticEncoder(out)
        encoder.write(model, symbol)
    if encoder is not None:
        encoder.finish()
    return out.getvalue(), out.bit_length


def ac_decode(payload: bytes, models: Iterable[FrequencyModel]) -> list[int]:
    """Decode one symbol per model, in order."""
    reader = BitReader(payload)
    decoder: ArithmeticDecoder | None = None
    symbols: list[int] = []
    for model in models:
        if model.size == 1:
            symbols.append(model.offset)
            continue
        if decoder is None:
            decoder = ArithmeticDecoder(reader)
        symbols.append(decoder.read(model))
    return symbols

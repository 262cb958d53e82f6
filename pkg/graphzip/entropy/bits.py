from __future__ import annotations

from graphzip.exceptions import BitstreamDecodeError


class BitWriter:
    """Big-endian bit sink backed by a bytearray."""

    def __init__(self) -> None:
        self._buf = bytearray()
        self._current = 0
        self._filled = 0
        self.bit_length = 0

    def write(self, bit: int) -> None:
        self._current = (self._current << 1) | (bit & 1)
        self._filled += 1
        self.bit_length += 1
        if self._filled == 8:
            self._buf.append(self._current)
            self._current = 0
            self._filled = 0

    def write_uint(self, value: int, width: int) -> None:
        """Write *value* as exactly *width* bits, most significant first."""
        if value < 0 or value >> width:
            raise ValueError(f"{value} does not fit in {width} bits")
        for shift in range(width - 1, -1, -1):
            self.write(value >> shift & 1)

    def extend(self, other: BitWriter) -> None:
        data, length = other.getvalue(), other.bit_length
        for i in range(length):
            self.write(data[i >> 3] >> (7 - (i & 7)) & 1)

    def getvalue(self) -> bytes:
        """Bytes written so far, the last one zero-padded."""
        if self._filled:
            return bytes(self._buf) + bytes([self._current << (8 - self._filled)])
        return bytes(self._buf)


class BitReader:
    """Big-endian bit source over a bytes object.

    :meth:`read` raises past the end; :meth:`read_or_zero` returns zeros
    there, the convention arithmetic decoding relies on.
    """

    def __init__(
        self, data: bytes, *, start: int = 0, limit: int | None = None
    ) -> None:
        self._data = data
        self.position = start
        self._limit = len(data) * 8 if limit is None else limit

    @property
    def remaining(self) -> int:
        return max(self._limit - self.position, 0)

    def _next(self) -> int:
        pos = self.position
        self.position += 1
        return self._data[pos >> 3] >> (7 - (pos & 7)) & 1

    def read(self) -> int:
        if self.position >= self._limit:
            raise BitstreamDecodeError("unexpected end of bitstream")
        return self._next()

    def read_or_zero(self) -> int:
        if self.position >= self._limit:
            self.position += 1
            return 0
        return self._next()

    def read_uint(self, width: int) -> int:
        value = 0
        for _ in range(width):
            value = (value << 1) | self.read()
        return value

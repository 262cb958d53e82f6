from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

FREQUENCY_TOTAL = 1 << 30


@dataclass(frozen=True, slots=True, eq=False)
class FrequencyModel:
    """Integer frequency table over the symbols ``offset .. offset + size - 1``.

    ``cumulative`` has ``size + 1`` entries starting at 0; every symbol has a
    frequency of at least one and the total never exceeds
    :data:`FREQUENCY_TOTAL`.
    """

    offset: int
    cumulative: NDArray[np.int64]

    @classmethod
    def from_probabilities(
        cls, probabilities: ArrayLike, offset: int = 0
    ) -> FrequencyModel:
        """Quantize *probabilities* (any non-negative weights) with a +1 floor.

        Non-finite or non-positive weights get the floor only; an all-zero
        vector becomes uniform.
        """
        p = np.asarray(probabilities, dtype=np.float64)
        size = p.size
        if size == 0:
            raise ValueError("a frequency model needs at least one symbol")
        if size > FREQUENCY_TOTAL // 2:
            raise ValueError(f"alphabet of {size} symbols is too large")
        p = np.where(np.isfinite(p) & (p > 0), p, 0.0)
        weight = p.sum()
        if weight > 0:
            scaled = np.floor(p / weight * (FREQUENCY_TOTAL - size))
            freqs = scaled.astype(np.int64) + 1
        else:
            freqs = np.ones(size, dtype=np.int64)
        cumulative = np.zeros(size + 1, dtype=np.int64)
        np.cumsum(freqs, out=cumulative[1:])
        return cls(offset=offset, cumulative=cumulative)

    @classmethod
    def bernoulli(cls, p: float) -> FrequencyModel:
        """Two-symbol table for ``P(1) = p`` with the same +1 floor."""
        span = FREQUENCY_TOTAL - 2
        low = math.floor((1.0 - p) * span) + 1
        high = low + math.floor(p * span) + 1
        return cls(offset=0, cumulative=np.array([0, low, high], dtype=np.int64))

    @classmethod
    def deterministic(cls, value: int) -> FrequencyModel:
        return cls(offset=value, cumulative=np.array([0, 1], dtype=np.int64))

    @classmethod
    def uniform(cls, size: int, offset: int = 0) -> FrequencyModel:
        return cls(offset=offset, cumulative=np.arange(size + 1, dtype=np.int64))

    @property
    def size(self) -> int:
        return len(self.cumulative) - 1

    @property
    def total(self) -> int:
        return int(self.cumulative[-1])

    def index_of(self, symbol: int) -> int:
        index = symbol - self.offset
        if not 0 <= index < self.size:
            raise ValueError(
                f"symbol {symbol} outside support "
                f"[{self.offset}, {self.offset + self.size - 1}]"
            )
        return index

    def bounds(self, index: int) -> tuple[int, int]:
        return int(self.cumulative[index]), int(self.cumulative[index + 1])

    def index_for_cumulative(self, value: int) -> int:
        """Largest index whose cumulative low bound is ``<= value``."""
        return int(np.searchsorted(self.cumulative, value, side="right")) - 1

    def probability(self, symbol: int) -> float:
        low, high = self.bounds(self.index_of(symbol))
        return (high - low) / self.total

    def bits(self, symbol: int) -> float:
        """Ideal codelength of *symbol* under the quantized table."""
        if self.size == 1:
            self.index_of(symbol)
            return 0.0
        low, high = self.bounds(self.index_of(symbol))
        return math.log2(self.total) - math.log2(high - low)

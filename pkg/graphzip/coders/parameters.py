"""Where a bucket's edge probability comes from while a tree is coded."""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Sequence

from graphzip.coders.kt import KtCounter, kt_update
from graphzip.entropy.distributions import clamp_probability


class ParameterSource(ABC):
    @abstractmethod
    def theta(self, bucket: int) -> float: ...

    def observe(self, bucket: int, left: int, size: int) -> None:
        """Record a coded left value out of *size* candidates."""

    def end_level(self) -> None:
        """Called once every node of a level has been coded."""


class FixedParameters(ParameterSource):
    """Probabilities known up front: learned statistics or the edge density."""

    def __init__(self, probabilities: Sequence[float]) -> None:
        if not probabilities:
            raise ValueError("at least one probability is required")
        self._thetas = [clamp_probability(p) for p in probabilities]

    def theta(self, bucket: int) -> float:
        return self._thetas[min(bucket, len(self._thetas) - 1)]


class KtParameters(ParameterSource):
    """One KT counter per bucket, created on first use.

    With ``per_node`` the counters move after every coded node; otherwise the
    level's observations are held back until :meth:`end_level`.
    """

    def __init__(self, *, per_node: bool) -> None:
        self.per_node = per_node
        self.counters: dict[int, KtCounter] = {}
        self._pending: list[tuple[int, int, int]] = []

    def _counter(self, bucket: int) -> KtCounter:
        counter = self.counters.get(bucket)
        if counter is None:
            counter = self.counters[bucket] = KtCounter()
        return counter

    def theta(self, bucket: int) -> float:
        counter = self.counters.get(bucket)
        return 0.5 if counter is None else counter.estimate

    def observe(self, bucket: int, left: int, size: int) -> None:
        if size == 0:
            return
        if self.per_node:
            kt_update(self._counter(bucket), left, size - left)
        else:
            self._pending.append((bucket, left, size))

    def end_level(self) -> None:
        for bucket, left, size in self._pending:
            kt_update(self._counter(bucket), left, size - left)
        self._pending.clear()

"""The coding loop over the cardinality tree.

One traversal serves encoding, decoding and costing: with a tree, the known
left values are handed to the channel; without one, the channel's answers
(decoded symbols) drive the walker and the tree is rebuilt as it goes.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from graphzip.coders.families import ModelFamily
from graphzip.coders.parameters import ParameterSource
from graphzip.coders.spec import CoderClass
from graphzip.entropy.channel import SymbolChannel
from graphzip.entropy.distributions import LevelConditional, binomial_model
from graphzip.entropy.models import FrequencyModel
from graphzip.exceptions import ContractViolation, MalformedTreeError
from graphzip.tree.nodes import CardinalityTree
from graphzip.tree.walk import Block, LevelWalker

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True, eq=False)
class DegreeModel:
    """Weights over degrees ``0..n-1`` for the class 2 degree symbol.

    The degree of a new pick is coded conditioned on being at least the
    number of earlier picks it is adjacent to and at most that plus the
    vertices still unsplit.
    """

    weights: NDArray[np.float64]

    @classmethod
    def from_counts(cls, counts: Sequence[float], n: int) -> DegreeModel:
        """Exact histogram of the coded graph (universal mode)."""
        weights = np.zeros(n)
        values = np.asarray(counts[:n], dtype=np.float64)
        weights[: len(values)] = values
        return cls(weights)

    @classmethod
    def smoothed(cls, histogram: Sequence[float], n: int) -> DegreeModel:
        """Averaged training histogram plus one half per degree (learned mode)."""
        model = cls.from_counts(histogram, n)
        return cls(model.weights + 0.5)

    def model(self, low: int, high: int) -> FrequencyModel:
        if low == high:
            return FrequencyModel.deterministic(low)
        return FrequencyModel.from_probabilities(
            self.weights[low : high + 1], offset=low
        )


class TreeCoder:
    def __init__(
        self,
        family: ModelFamily,
        klass: CoderClass,
        params: ParameterSource,
        degrees: DegreeModel | None = None,
    ) -> None:
        if klass is CoderClass.TWO and degrees is None:
            raise ContractViolation("class 2 coding needs a degree model")
        self.family = family
        self.klass = klass
        self.params = params
        self.degrees = degrees

    def run(
        self,
        n: int,
        channel: SymbolChannel,
        tree: CardinalityTree | None = None,
    ) -> CardinalityTree:
        """Code levels ``1..n-1``; returns the tree that was coded or decoded."""
        if tree is not None and tree.n != n:
            raise MalformedTreeError(f"tree has {tree.n} vertices, expected {n}")
        walker = LevelWalker(n)
        while not walker.finished:
            blocks = walker.blocks()
            known = None
            if tree is not None:
                known = tree.left_values(walker.next_level)
            if self.klass is CoderClass.ONE:
                values = self._code_nodes(walker, blocks, channel, known)
            else:
                values = self._code_level(walker, blocks, channel, known)
            self.params.end_level()
            walker.advance(values)
        logger.debug(
            "coded %d levels with %s/%d: %d symbols, %.1f ideal bits",
            n - 1,
            self.family.family,
            self.klass,
            channel.symbols,
            channel.ideal_bits,
        )
        return walker.tree()

    def _code_nodes(
        self,
        walker: LevelWalker,
        blocks: list[Block],
        channel: SymbolChannel,
        known: Sequence[int] | None,
    ) -> list[int]:
        values: list[int] = []
        for j, block in enumerate(blocks):
            bucket = self.family.bucket(walker, block)
            model = binomial_model(block.size, self.params.theta(bucket))
            value = channel.code(model, None if known is None else known[j])
            self.params.observe(bucket, value, block.size)
            values.append(value)
        return values

    def _code_level(
        self,
        walker: LevelWalker,
        blocks: list[Block],
        channel: SymbolChannel,
        known: Sequence[int] | None,
    ) -> list[int]:
        assert self.degrees is not None
        known_low = walker.pick_mask.bit_count()
        degree_model = self.degrees.model(known_low, known_low + walker.remaining)
        degree = channel.code(
            degree_model, None if known is None else known_low + sum(known)
        )
        target = degree - known_low

        buckets = [self.family.bucket(walker, block) for block in blocks]
        conditional = LevelConditional(
            [block.size for block in blocks],
            [self.params.theta(bucket) for bucket in buckets],
            target,
        )
        values: list[int] = []
        remaining = target
        for j, (block, bucket) in enumerate(zip(blocks, buckets, strict=True)):
            value = channel.code(
                conditional.model(j, remaining), None if known is None else known[j]
            )
            remaining -= value
            self.params.observe(bucket, value, block.size)
            values.append(value)
        return values

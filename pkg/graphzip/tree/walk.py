"""Level-by-level traversal state shared by encoder, decoder and trainer.

The walker only needs the left values of each level to move on, so the same
loop drives the encoder (values read off a built tree), the decoder (values
read from the bitstream) and training (values tallied).
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from graphzip.exceptions import ContractViolation
from graphzip.tree.nodes import CardinalityTree


def iter_bits(mask: int) -> Iterator[int]:
    """Set bit positions of *mask*, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class Block:
    """One nonempty parent at the previous level and its split budget.

    ``size`` is the number of vertices that go left or right (one fewer than
    the parent's cardinality for the first nonempty node). ``mask`` has bit
    ``j`` set when the parent's vertices are adjacent to the vertex picked at
    level ``j``.
    """

    position: int
    size: int
    mask: int
    is_alpha: bool


class LevelWalker:
    """Mutable traversal state; ``level`` is the last completed level."""

    def __init__(self, n: int) -> None:
        self.n = n
        self.level = 0
        self._cards: list[int] = [n]
        self._masks: list[int] = [0]
        # alpha_masks[j]: mask of the first nonempty node at level j, i.e. the
        # earlier picks adjacent to the vertex picked at level j + 1.
        self.alpha_masks: list[int] = []
        # picked_adjacency[j]: adjacency of the level-j pick to other picks.
        self.picked_adjacency: list[int] = [0]
        self._blocks: list[Block] | None = None
        self.levels: list[tuple[int, ...]] = [(n,)]

    @property
    def finished(self) -> bool:
        return self.level >= self.n - 1

    @property
    def next_level(self) -> int:
        return self.level + 1

    @property
    def remaining(self) -> int:
        """Vertices still to be split at the next level (``n - next_level``)."""
        return self.n - self.next_level

    def blocks(self) -> list[Block]:
        """Blocks for the next level, computing the pick's context on first call."""
        if self._blocks is not None:
            return self._blocks
        if self.finished:
            raise ContractViolation("tree traversal already complete")
        alpha = next(p for p, c in enumerate(self._cards) if c > 0)
        alpha_mask = self._masks[alpha]
        self.alpha_masks.append(alpha_mask)
        level = self.next_level
        adjacency = self.picked_adjacency
        for j in iter_bits(alpha_mask):
            adjacency[j] |= 1 << level
        adjacency.append(alpha_mask)

        self._blocks = [
            Block(
                position=p,
                size=c - 1 if p == alpha else c,
                mask=self._masks[p],
                is_alpha=p == alpha,
            )
            for p, c in enumerate(self._cards)
            if c > 0
        ]
        return self._blocks

    @property
    def pick_mask(self) -> int:
        """Earlier picks adjacent to the vertex picked for the next level."""
        self.blocks()
        return self.alpha_masks[-1]

    def advance(self, left_values: Sequence[int]) -> None:
        blocks = self.blocks()
        if len(left_values) != len(blocks):
            raise ContractViolation(
                f"expected {len(blocks)} left values, got {len(left_values)}"
            )
        bit = 1 << self.next_level
        cards: list[int] = []
        masks: list[int] = []
        for block, value in zip(blocks, left_values, strict=True):
            if not 0 <= value <= block.size:
                raise ContractViolation(
                    f"left value {value} outside [0, {block.size}]"
                )
            cards += (value, block.size - value)
            masks += (block.mask | bit, block.mask)
        self._cards, self._masks = cards, masks
        self.levels.append(tuple(cards))
        self.level += 1
        self._blocks = None

    def tree(self) -> CardinalityTree:
        return CardinalityTree(n=self.n, levels=tuple(self.levels))

    # Context queries for a block of the current level.

    def common_mask(self, block: Block) -> int:
        """Levels whose pick is adjacent to both the parent and the new pick."""
        return block.mask & self.pick_mask


def replay(tree: CardinalityTree, upto: int) -> LevelWalker:
    """Walker positioned so that ``next_level == upto``."""
    walker = LevelWalker(tree.n)
    while walker.next_level < upto:
        walker.blocks()
        walker.advance(tree.left_values(walker.next_level))
    return walker

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from functools import cached_property

from graphzip.exceptions import ContractViolation, MalformedTreeError


@dataclass(frozen=True, slots=True, order=True)
class NodeRef:
    """Address ``[level, index]`` of a tree node; ``index`` counts from 1.

    Children are materialized in (left, right) pairs under every nonempty
    parent, so left nodes have odd indices and right nodes even ones.
    """

    level: int
    index: int

    @property
    def is_left(self) -> bool:
        return self.level > 0 and self.index % 2 == 1

    @property
    def position(self) -> int:
        return self.index - 1


ROOT = NodeRef(0, 1)


class MotifClass(StrEnum):
    """4-vertex motif closed by a left node, in decreasing priority."""

    FOUR_CLIQUE = "four_clique"
    DOUBLE_TRIANGLE = "double_triangle"
    FOUR_CYCLE = "four_cycle"
    NONE = "none"


@dataclass(frozen=True)
class CardinalityTree:
    """Cardinalities of the rooted binary tree built from a graph.

    ``levels[0] == (n,)``; every later level lists the (left, right) child
    pairs of the previous level's nonempty nodes, left to right. A graph with
    ``n`` vertices yields ``n`` levels (``0..n-1``), and level ``l`` sums to
    ``n - l``.
    """

    n: int
    levels: tuple[tuple[int, ...], ...]

    def card(self, ref: NodeRef) -> int:
        return self._level(ref.level)[ref.position]

    def _level(self, level: int) -> tuple[int, ...]:
        if not 0 <= level < len(self.levels):
            raise ContractViolation(f"level {level} does not exist")
        return self.levels[level]

    def alpha(self, level: int) -> NodeRef:
        """First nonempty node of *level*."""
        for pos, card in enumerate(self._level(level)):
            if card > 0:
                return NodeRef(level, pos + 1)
        raise ContractViolation(f"level {level} has no nonempty node")

    def left_values(self, level: int) -> tuple[int, ...]:
        return self._level(level)[0::2]

    @cached_property
    def _parent_positions(self) -> tuple[tuple[int, ...], ...]:
        table: list[tuple[int, ...]] = [()]
        for level in range(1, len(self.levels)):
            nonempty = [p for p, c in enumerate(self.levels[level - 1]) if c > 0]
            table.append(tuple(p for p in nonempty for _ in range(2)))
        return tuple(table)

    def parent(self, ref: NodeRef) -> NodeRef | None:
        if ref.level == 0:
            return None
        positions = self._parent_positions[ref.level]
        if not 0 <= ref.position < len(positions):
            raise ContractViolation(f"node {ref} does not exist")
        return NodeRef(ref.level - 1, positions[ref.position] + 1)

    def root_path(self, ref: NodeRef) -> list[NodeRef]:
        """Nodes from the root down to *ref*, inclusive."""
        path = [ref]
        while (up := self.parent(path[-1])) is not None:
            path.append(up)
        return path[::-1]

    @cached_property
    def _masks(self) -> tuple[tuple[int, ...], ...]:
        # Bit l is set when the root path has a left node at level l.
        masks: list[tuple[int, ...]] = [(0,)]
        for level in range(1, len(self.levels)):
            parents = self._parent_positions[level]
            prev = masks[-1]
            bit = 1 << level
            masks.append(
                tuple(
                    prev[p] | bit if pos % 2 == 0 else prev[p]
                    for pos, p in enumerate(parents)
                )
            )
        return tuple(masks)

    def left_mask(self, ref: NodeRef) -> int:
        self.card(ref)
        return self._masks[ref.level][ref.position]

    def validate(self) -> None:
        """Raise :class:`MalformedTreeError` unless all structural invariants hold."""
        if self.n < 1:
            raise MalformedTreeError("a tree needs at least one vertex")
        if len(self.levels) != self.n:
            raise MalformedTreeError(
                f"expected {self.n} levels for n={self.n}, got {len(self.levels)}"
            )
        if self.levels[0] != (self.n,):
            raise MalformedTreeError(f"root must be ({self.n},), got {self.levels[0]}")
        for level in range(1, self.n):
            prev, cur = self.levels[level - 1], self.levels[level]
            nonempty = [p for p, c in enumerate(prev) if c > 0]
            if len(cur) != 2 * len(nonempty):
                raise MalformedTreeError(
                    f"level {level} has {len(cur)} nodes, "
                    f"expected {2 * len(nonempty)}"
                )
            if any(c < 0 for c in cur):
                raise MalformedTreeError(f"negative cardinality at level {level}")
            for j, p in enumerate(nonempty):
                expected = prev[p] - (1 if j == 0 else 0)
                if cur[2 * j] + cur[2 * j + 1] != expected:
                    raise MalformedTreeError(
                        f"children of [{level - 1},{p + 1}] sum to "
                        f"{cur[2 * j] + cur[2 * j + 1]}, expected {expected}"
                    )


def format_tree(tree: CardinalityTree) -> str:
    """Indented text dump, one line per level, ``L``/``R`` marking the side."""
    lines = [f"0: {tree.levels[0][0]}"]
    for level in range(1, len(tree.levels)):
        cells = [
            f"{'L' if pos % 2 == 0 else 'R'}{card}"
            for pos, card in enumerate(tree.levels[level])
        ]
        lines.append(f"{'  ' * min(level, 8)}{level}: {' '.join(cells)}")
    return "\n".join(lines)

from __future__ import annotations

import logging
import random
from collections.abc import Sequence
from typing import Protocol

from graphzip.exceptions import ContractViolation, EmptyGraphError
from graphzip.graph.core import Graph
from graphzip.tree.nodes import CardinalityTree

logger = logging.getLogger(__name__)


class VertexPicker(Protocol):
    """Chooses which vertex of the first nonempty node is removed next."""

    def pick(self, candidates: Sequence[int], level: int) -> int: ...


class SmallestIndexPicker:
    """Deterministic default: the smallest vertex id in the node."""

    def pick(self, candidates: Sequence[int], level: int) -> int:
        return min(candidates)


class RandomPicker:
    """Uniform choice within the node, reproducible through *seed*."""

    def __init__(self, seed: int | None = None) -> None:
        self._rng = random.Random(seed)

    def pick(self, candidates: Sequence[int], level: int) -> int:
        return self._rng.choice(candidates)


class SequencePicker:
    """Replays a fixed pick order; ``order[l]`` is picked at level ``l``."""

    def __init__(self, order: Sequence[int]) -> None:
        self._order = list(order)

    def pick(self, candidates: Sequence[int], level: int) -> int:
        if level >= len(self._order):
            raise ContractViolation(f"no pick given for level {level}")
        vertex = self._order[level]
        if vertex not in candidates:
            raise ContractViolation(
                f"vertex {vertex} is not in the first nonempty node at level {level}"
            )
        return vertex


def graph_to_tree(
    g: Graph, picker: VertexPicker | None = None
) -> tuple[CardinalityTree, list[int]]:
    """Split vertices level by level around each picked vertex.

    At level ``l`` one vertex is removed from the first nonempty node and the
    remaining vertices of every nonempty node are split into its neighbors
    (left child) and non-neighbors (right child). Returns the tree and the
    ``n - 1`` picked vertices in order.
    """
    if g.n < 1:
        raise EmptyGraphError("cannot build a tree for a graph with no vertices")
    picker = picker or SmallestIndexPicker()

    nodes: list[list[int]] = [list(range(g.n))]
    levels: list[tuple[int, ...]] = [(g.n,)]
    picks: list[int] = []

    for level in range(g.n - 1):
        alpha = next(i for i, members in enumerate(nodes) if members)
        vertex = picker.pick(nodes[alpha], level)
        picks.append(vertex)
        neighbors = g.adjacency[vertex]

        children: list[list[int]] = []
        for i, members in enumerate(nodes):
            if not members:
                continue
            if i == alpha:
                members = [u for u in members if u != vertex]
            left = [u for u in members if u in neighbors]
            right = [u for u in members if u not in neighbors]
            children += (left, right)
        nodes = children
        levels.append(tuple(len(c) for c in children))

    logger.debug("Built tree with %d levels for n=%d", len(levels), g.n)
    return CardinalityTree(n=g.n, levels=tuple(levels)), picks


def tree_to_graph(tree: CardinalityTree) -> Graph:
    """Materialize a graph with the given tree.

    Vertices ``0..n-1`` start in the root in order; each level removes the
    first vertex of the first nonempty node and hands every node's left child
    a prefix of its remaining vertices. The vertex removed at level ``l - 1``
    is joined to every vertex in a left node of level ``l``. Running
    :func:`graph_to_tree` on the result with :class:`SmallestIndexPicker`
    reproduces *tree*.
    """
    tree.validate()
    n = tree.n
    nodes: list[list[int]] = [list(range(n))]
    edges: list[tuple[int, int]] = []

    for level in range(1, n):
        alpha = next(i for i, members in enumerate(nodes) if members)
        vertex = nodes[alpha][0]
        cards = tree.levels[level]
        children: list[list[int]] = []
        for i, members in enumerate(nodes):
            if not members:
                continue
            if i == alpha:
                members = members[1:]
            k = cards[len(children)]
            left, right = members[:k], members[k:]
            edges += ((vertex, u) for u in left)
            children += (left, right)
        nodes = children

    return Graph.from_edges(n, edges)

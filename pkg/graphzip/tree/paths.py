"""Path-set queries over the cardinality tree.

Level ``j`` belongs to a node's path set when the node's root path has a left
node at level ``j``, meaning the node's vertices are adjacent to the vertex
picked at level ``j`` (the one removed from the first nonempty node of level
``j - 1``).
"""

from __future__ import annotations

from graphzip.exceptions import ContractViolation
from graphzip.tree.nodes import CardinalityTree, MotifClass, NodeRef
from graphzip.tree.walk import Block, LevelWalker, iter_bits, replay


def _levels(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def ci_levels(node: NodeRef, tree: CardinalityTree) -> frozenset[int]:
    """Levels where both *node* and its level's first nonempty node went left."""
    alpha = tree.alpha(node.level)
    return _levels(tree.left_mask(node) & tree.left_mask(alpha))


def i_levels(node: NodeRef, tree: CardinalityTree) -> frozenset[int]:
    """Levels where either *node* or its level's first nonempty node went left."""
    alpha = tree.alpha(node.level)
    return _levels(tree.left_mask(node) | tree.left_mask(alpha))


def motif_for_block(walker: LevelWalker, block: Block) -> MotifClass:
    """Classify the motif closed by the left child of *block*.

    A vertex ``x`` of the block joining the new pick ``v`` closes:

    * a 4-clique when two common neighbors of ``x`` and ``v`` are adjacent,
      otherwise a double triangle when there are at least two of them;
    * a double triangle when the single common neighbor ``c`` has another
      neighbor adjacent to ``v`` or to ``x``;
    * a 4-cycle when there is no common neighbor but some neighbor of ``x``
      is adjacent to some neighbor of ``v``.
    """
    pick = walker.pick_mask
    common = block.mask & pick
    count = common.bit_count()
    adjacency = walker.picked_adjacency

    if count >= 2:
        for level in iter_bits(common):
            if adjacency[level] & common:
                return MotifClass.FOUR_CLIQUE
        return MotifClass.DOUBLE_TRIANGLE

    if count == 1:
        shared = adjacency[common.bit_length() - 1]
        if shared & pick or shared & block.mask:
            return MotifClass.DOUBLE_TRIANGLE
        return MotifClass.NONE

    if (block.mask | pick).bit_count() > 1:
        for level in iter_bits(block.mask):
            if adjacency[level] & pick:
                return MotifClass.FOUR_CYCLE
    return MotifClass.NONE


def classify_4motif(left_node: NodeRef, tree: CardinalityTree) -> MotifClass:
    if not left_node.is_left:
        raise ContractViolation(f"{left_node} is not a left node")
    parent = tree.parent(left_node)
    assert parent is not None
    walker = replay(tree, left_node.level)
    block = next(b for b in walker.blocks() if b.position == parent.position)
    return motif_for_block(walker, block)

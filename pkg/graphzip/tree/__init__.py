from graphzip.tree.nodes import (
    ROOT,
    CardinalityTree,
    MotifClass,
    NodeRef,
    format_tree,
)
from graphzip.tree.paths import (
    ci_levels,
    classify_4motif,
    i_levels,
    motif_for_block,
)
from graphzip.tree.transform import (
    RandomPicker,
    SequencePicker,
    SmallestIndexPicker,
    VertexPicker,
    graph_to_tree,
    tree_to_graph,
)
from graphzip.tree.walk import Block, LevelWalker, iter_bits, replay

__all__ = [
    "ROOT",
    "Block",
    "CardinalityTree",
    "LevelWalker",
    "MotifClass",
    "NodeRef",
    "RandomPicker",
    "SequencePicker",
    "SmallestIndexPicker",
    "VertexPicker",
    "ci_levels",
    "classify_4motif",
    "format_tree",
    "graph_to_tree",
    "i_levels",
    "iter_bits",
    "motif_for_block",
    "replay",
    "tree_to_graph",
]

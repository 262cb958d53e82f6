"""Model families: how a left node's context selects its edge-probability bucket.

Each family looks only at the part of the tree already coded (the walker's
masks), so the decoder reaches the same bucket as the encoder.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import ClassVar

from graphzip.coders.registry import register_family
from graphzip.coders.spec import Family
from graphzip.tree.nodes import MotifClass
from graphzip.tree.paths import motif_for_block
from graphzip.tree.walk import Block, LevelWalker

# Common-neighbor counts at or above this share the tail bucket.
COMMON_NEIGHBOR_CAP = 64


class ModelFamily(ABC):
    family: ClassVar[Family]
    bucket_names: ClassVar[tuple[str, ...]] = ()

    @abstractmethod
    def bucket(self, walker: LevelWalker, block: Block) -> int:
        """Bucket of the left child of *block* at the walker's next level."""

    def bucket_name(self, bucket: int) -> str:
        if bucket < len(self.bucket_names):
            return self.bucket_names[bucket]
        return f"{self.family}[{bucket}]"


@register_family
class IidFamily(ModelFamily):
    family = Family.IID
    bucket_names = ("p",)

    def bucket(self, walker: LevelWalker, block: Block) -> int:
        return 0


@register_family
class TriangleFamily(ModelFamily):
    """Bucket 0 when the block and the new pick share an earlier neighbor."""

    family = Family.TRIANGLE
    bucket_names = ("p_tri", "p_tri_check")

    def bucket(self, walker: LevelWalker, block: Block) -> int:
        return 0 if walker.common_mask(block) else 1


@register_family
class CommonNeighborFamily(ModelFamily):
    family = Family.COMMON_NEIGHBOR

    def bucket(self, walker: LevelWalker, block: Block) -> int:
        return min(walker.common_mask(block).bit_count(), COMMON_NEIGHBOR_CAP)

    def bucket_name(self, bucket: int) -> str:
        return f"p_cn[{bucket}]"


_MOTIF_BUCKETS = {
    MotifClass.FOUR_CLIQUE: 0,
    MotifClass.DOUBLE_TRIANGLE: 1,
    MotifClass.FOUR_CYCLE: 2,
    MotifClass.NONE: 3,
}


@register_family
class FourMotifFamily(ModelFamily):
    family = Family.FOUR_MOTIF
    bucket_names = ("p_4clique", "p_dtri", "p_4cycle", "p_4check")

    def bucket(self, walker: LevelWalker, block: Block) -> int:
        return _MOTIF_BUCKETS[motif_for_block(walker, block)]

from graphzip.coders.codec import (
    Bitstream,
    CodeLength,
    decode_graph,
    decode_tree,
    encode_best,
    encode_graph,
    labeled_iid_bits,
    measure,
)
from graphzip.coders.engine import DegreeModel, TreeCoder
from graphzip.coders.families import (
    COMMON_NEIGHBOR_CAP,
    CommonNeighborFamily,
    FourMotifFamily,
    IidFamily,
    ModelFamily,
    TriangleFamily,
)
from graphzip.coders.kt import KtCounter, kt_estimate, kt_update
from graphzip.coders.parameters import FixedParameters, KtParameters, ParameterSource
from graphzip.coders.registry import get_family, list_families, register_family
from graphzip.coders.spec import CoderClass, CoderSpec, Family, Mode, all_specs
from graphzip.coders.stats import CoderStats, load_stats, save_stats
from graphzip.coders.training import BucketTally, tally_graph, train_stats

__all__ = [
    "COMMON_NEIGHBOR_CAP",
    "Bitstream",
    "BucketTally",
    "CodeLength",
    "CoderClass",
    "CoderSpec",
    "CoderStats",
    "CommonNeighborFamily",
    "DegreeModel",
    "Family",
    "FixedParameters",
    "FourMotifFamily",
    "IidFamily",
    "KtCounter",
    "KtParameters",
    "Mode",
    "ModelFamily",
    "ParameterSource",
    "TreeCoder",
    "TriangleFamily",
    "all_specs",
    "decode_graph",
    "decode_tree",
    "encode_best",
    "encode_graph",
    "get_family",
    "kt_estimate",
    "kt_update",
    "labeled_iid_bits",
    "list_families",
    "load_stats",
    "measure",
    "register_family",
    "save_stats",
    "tally_graph",
    "train_stats",
]

from graphzip.entropy.arithmetic import (
    ArithmeticDecoder,
    ArithmeticEncoder,
    ac_decode,
    ac_encode,
)
from graphzip.entropy.bits import BitReader, BitWriter
from graphzip.entropy.channel import (
    CostChannel,
    DecodeChannel,
    EncodeChannel,
    SymbolChannel,
)
from graphzip.entropy.distributions import (
    EPSILON,
    LevelConditional,
    binomial_model,
    binomial_pmf,
    clamp_probability,
    level_conditional_encode,
    poisson_binomial_distribution,
    poisson_binomial_pmf,
)
from graphzip.entropy.integers import (
    composition_count,
    composition_rank_width,
    decode_positive_integer,
    elias_delta_length,
    encode_positive_integer,
    rank_weak_composition,
    unrank_weak_composition,
)
from graphzip.entropy.models import FREQUENCY_TOTAL, FrequencyModel

__all__ = [
    "EPSILON",
    "FREQUENCY_TOTAL",
    "ArithmeticDecoder",
    "ArithmeticEncoder",
    "BitReader",
    "BitWriter",
    "CostChannel",
    "DecodeChannel",
    "EncodeChannel",
    "FrequencyModel",
    "LevelConditional",
    "SymbolChannel",
    "ac_decode",
    "ac_encode",
    "binomial_model",
    "binomial_pmf",
    "clamp_probability",
    "composition_count",
    "composition_rank_width",
    "decode_positive_integer",
    "elias_delta_length",
    "encode_positive_integer",
    "level_conditional_encode",
    "poisson_binomial_distribution",
    "poisson_binomial_pmf",
    "rank_weak_composition",
    "unrank_weak_composition",
]

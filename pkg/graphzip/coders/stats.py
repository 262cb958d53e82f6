from __future__ import annotations

from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from graphzip.coders.spec import Family
from graphzip.entropy.distributions import clamp_probability
from graphzip.exceptions import CoderConfigError

STATS_SCHEMA_VERSION = 1

# Fixed bucket counts; the common-neighbor family has one bucket per count.
FIXED_BUCKETS: dict[Family, int] = {
    Family.IID: 1,
    Family.TRIANGLE: 2,
    Family.FOUR_MOTIF: 4,
}


class CoderStats(BaseModel):
    """Learned statistics shared by encoder and decoder.

    ``probabilities`` holds one edge probability per bucket of the family:
    ``(p,)`` for IID, ``(p_tri, p_tri_check)`` for triangles, ``p_cn[m]``
    for ``m`` common neighbors, and ``(p_4clique, p_dtri, p_4cycle,
    p_4check)`` for 4-node motifs. ``degree_hist`` is the averaged degree
    histogram used by class 2.
    """

    model_config = ConfigDict(frozen=True)

    schema_version: int = STATS_SCHEMA_VERSION
    family: Family
    probabilities: tuple[float, ...] = Field(min_length=1)
    degree_hist: tuple[float, ...] = ()
    training_graphs: int = 0
    mean_n: float = 0.0

    @field_validator("probabilities")
    @classmethod
    def _clamp(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        return tuple(clamp_probability(p) for p in value)

    @field_validator("degree_hist")
    @classmethod
    def _non_negative(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        if any(c < 0 for c in value):
            raise ValueError("degree histogram counts must be non-negative")
        return value

    @model_validator(mode="after")
    def _bucket_count(self) -> CoderStats:
        expected = FIXED_BUCKETS.get(self.family)
        if expected is not None and len(self.probabilities) != expected:
            raise ValueError(
                f"{self.family} statistics need {expected} probabilities, "
                f"got {len(self.probabilities)}"
            )
        return self

    def theta(self, bucket: int) -> float:
        """Probability for *bucket*; buckets past the end share the last entry."""
        return self.probabilities[min(bucket, len(self.probabilities) - 1)]

    def _named(self, family: Family, index: int) -> float:
        if self.family is not family:
            raise AttributeError(f"{self.family} statistics have no {family} entry")
        return self.probabilities[index]

    @property
    def p(self) -> float:
        return self._named(Family.IID, 0)

    @property
    def p_tri(self) -> float:
        return self._named(Family.TRIANGLE, 0)

    @property
    def p_tri_check(self) -> float:
        return self._named(Family.TRIANGLE, 1)

    @property
    def p_cn(self) -> tuple[float, ...]:
        self._named(Family.COMMON_NEIGHBOR, 0)
        return self.probabilities

    @property
    def p_4clique(self) -> float:
        return self._named(Family.FOUR_MOTIF, 0)

    @property
    def p_dtri(self) -> float:
        return self._named(Family.FOUR_MOTIF, 1)

    @property
    def p_4cycle(self) -> float:
        return self._named(Family.FOUR_MOTIF, 2)

    @property
    def p_4check(self) -> float:
        return self._named(Family.FOUR_MOTIF, 3)


def save_stats(path: Path, stats: CoderStats) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(stats.model_dump_json(indent=2) + "\n")


def load_stats(path: Path) -> CoderStats:
    try:
        stats = CoderStats.model_validate_json(path.read_text())
    except ValueError as exc:
        raise CoderConfigError(f"invalid statistics file {path}: {exc}") from exc
    if stats.schema_version != STATS_SCHEMA_VERSION:
        raise CoderConfigError(
            f"statistics file {path} has schema version {stats.schema_version}, "
            f"expected {STATS_SCHEMA_VERSION}"
        )
    return stats

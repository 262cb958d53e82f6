"""Learning coder statistics from a training set of graphs.

Each graph is turned into its tree and walked exactly as the coder walks it,
so bucket frequencies reflect the contexts the coder will actually see.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Sequence
from dataclasses import dataclass, field

from graphzip.coders.registry import get_family
from graphzip.coders.spec import CoderSpec, Family
from graphzip.coders.stats import FIXED_BUCKETS, CoderStats
from graphzip.exceptions import CoderConfigError
from graphzip.graph.core import Graph, degree_histogram
from graphzip.tree.transform import VertexPicker, graph_to_tree
from graphzip.tree.walk import LevelWalker

logger = logging.getLogger(__name__)


@dataclass
class BucketTally:
    """Left-value and split-size sums per bucket for one graph."""

    left: dict[int, int] = field(default_factory=lambda: defaultdict(int))
    size: dict[int, int] = field(default_factory=lambda: defaultdict(int))

    def ratio(self, bucket: int) -> float | None:
        total = self.size.get(bucket, 0)
        return self.left[bucket] / total if total else None

    @property
    def overall(self) -> float | None:
        total = sum(self.size.values())
        return sum(self.left.values()) / total if total else None


def tally_graph(
    g: Graph, family: Family, picker: VertexPicker | None = None
) -> BucketTally:
    tree, _ = graph_to_tree(g, picker)
    model = get_family(family)
    tally = BucketTally()
    walker = LevelWalker(g.n)
    while not walker.finished:
        values = tree.left_values(walker.next_level)
        for block, value in zip(walker.blocks(), values, strict=True):
            if block.size == 0:
                continue
            bucket = model.bucket(walker, block)
            tally.left[bucket] += value
            tally.size[bucket] += block.size
        walker.advance(values)
    return tally


def _average_histogram(graphs: Sequence[Graph]) -> tuple[float, ...]:
    length = max(g.n for g in graphs)
    sums = [0.0] * length
    for g in graphs:
        for k, count in enumerate(degree_histogram(g).counts):
            sums[k] += count
    return tuple(s / len(graphs) for s in sums)


def train_stats(
    graphs: Sequence[Graph],
    spec: CoderSpec,
    *,
    picker: VertexPicker | None = None,
) -> CoderStats:
    """Average per-graph bucket ratios ``sum(left) / sum(left + right)``.

    A bucket no training graph reached falls back to the mean overall edge
    ratio. The degree histogram is always included so the statistics serve
    both coder classes.
    """
    if not graphs:
        raise CoderConfigError("training needs at least one graph")
    tallies = [tally_graph(g, spec.family, picker) for g in graphs]

    seen = {b for t in tallies for b, size in t.size.items() if size}
    bucket_count = FIXED_BUCKETS.get(spec.family)
    if bucket_count is None:
        bucket_count = max(seen, default=0) + 1

    overall = [r for t in tallies if (r := t.overall) is not None]
    fallback = sum(overall) / len(overall) if overall else 0.5

    probabilities: list[float] = []
    for bucket in range(bucket_count):
        ratios = [r for t in tallies if (r := t.ratio(bucket)) is not None]
        if ratios:
            probabilities.append(sum(ratios) / len(ratios))
        else:
            logger.info("bucket %d never observed; using %.4f", bucket, fallback)
            probabilities.append(fallback)

    stats = CoderStats(
        family=spec.family,
        probabilities=tuple(probabilities),
        degree_hist=_average_histogram(graphs),
        training_graphs=len(graphs),
        mean_n=sum(g.n for g in graphs) / len(graphs),
    )
    logger.info(
        "trained %s on %d graphs: %s",
        spec.family,
        len(graphs),
        ", ".join(f"{p:.4f}" for p in stats.probabilities),
    )
    return stats

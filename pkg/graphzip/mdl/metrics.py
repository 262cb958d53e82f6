from __future__ import annotations

from graphzip.exceptions import GraphDomainError
from graphzip.graph.core import Graph


def f1_score(estimate: Graph, truth: Graph) -> float:
    """Harmonic mean of edge precision and recall of *estimate* against *truth*.

    Two empty graphs score 1; otherwise any empty side scores 0.
    """
    if estimate.n != truth.n:
        raise GraphDomainError(
            f"graphs differ in size: {estimate.n} vs {truth.n} vertices"
        )
    found = set(estimate.edges())
    expected = set(truth.edges())
    if not found and not expected:
        return 1.0
    common = len(found & expected)
    if common == 0:
        return 0.0
    precision = common / len(found)
    recall = common / len(expected)
    return 2 * precision * recall / (precision + recall)

from __future__ import annotations

import numpy as np
import pytest

from graphzip.exceptions import GraphDomainError
from graphzip.graph.precision import graph_from_precision


class TestGraphFromPrecision:
    def test_support_becomes_edges(self) -> None:
        omega = np.array(
            [
                [1.0, 0.5, 0.0],
                [0.5, 1.0, 1e-12],
                [0.0, 1e-12, 1.0],
            ]
        )
        g = graph_from_precision(omega)
        assert list(g.edges()) == [(0, 1)]

    def test_either_triangle_counts(self) -> None:
        omega = np.eye(3)
        omega[2, 0] = 0.3
        assert list(graph_from_precision(omega).edges()) == [(0, 2)]

    def test_custom_tolerance(self) -> None:
        omega = np.array([[1.0, 0.01], [0.01, 1.0]])
        assert graph_from_precision(omega, tol=0.1).edge_count == 0

    def test_rejects_non_square(self) -> None:
        with pytest.raises(GraphDomainError):
            graph_from_precision(np.ones((2, 3)))

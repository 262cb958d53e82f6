from __future__ import annotations

import pytest

from graphzip.exceptions import UnsupportedGraphError
from graphzip.graph import core
from graphzip.graph.core import Graph
from graphzip.graph.isomorphism import is_isomorphic_small


class TestIsIsomorphicSmall:
    def test_relabeled_graph(self) -> None:
        g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)])
        assert is_isomorphic_small(g, g.relabel([5, 3, 1, 0, 2, 4]))

    def test_same_degrees_different_structure(self) -> None:
        # Both are 2-regular on six vertices.
        two_triangles = Graph.from_edges(
            6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
        )
        assert not is_isomorphic_small(core.cycle(6), two_triangles)

    def test_different_sizes(self) -> None:
        assert not is_isomorphic_small(core.path(4), core.path(5))

    def test_rejects_large_graphs(self) -> None:
        with pytest.raises(UnsupportedGraphError):
            is_isomorphic_small(core.empty(13), core.empty(13))

from __future__ import annotations

import pytest

from graphzip.graph import core
from graphzip.graph.core import Graph, degree_histogram


class TestFromEdges:
    def test_drops_duplicates_and_self_loops(self) -> None:
        g = Graph.from_edges(4, [(0, 1), (1, 0), (2, 2), (1, 3)])
        assert g.edge_count == 2
        assert list(g.edges()) == [(0, 1), (1, 3)]

    def test_out_of_range_edge(self) -> None:
        with pytest.raises(ValueError, match="out of range"):
            Graph.from_edges(3, [(0, 3)])

    def test_negative_vertex_count(self) -> None:
        with pytest.raises(ValueError):
            Graph.from_edges(-1, [])

    def test_degree_sum_is_twice_edge_count(self, small_graphs: list[Graph]) -> None:
        for g in small_graphs:
            assert sum(g.degrees()) == 2 * g.edge_count

    def test_networkx_round_trip(self) -> None:
        g = core.cycle(5)
        back = Graph.from_networkx(g.to_networkx())
        assert list(back.edges()) == list(g.edges())
        assert back.n == 5


class TestNamedGraphs:
    def test_complete(self) -> None:
        g = core.complete(4)
        assert g.edge_count == 6
        assert g.degrees() == [3, 3, 3, 3]

    def test_star_center_is_zero(self) -> None:
        g = core.star(5)
        assert g.degree(0) == 4
        assert all(g.degree(v) == 1 for v in range(1, 5))

    def test_cycle_needs_three_vertices(self) -> None:
        with pytest.raises(ValueError):
            core.cycle(2)

    def test_relabel_keeps_structure(self) -> None:
        g = core.path(4).relabel([3, 2, 1, 0])
        assert list(g.edges()) == [(0, 1), (1, 2), (2, 3)]

    def test_relabel_rejects_non_permutation(self) -> None:
        with pytest.raises(ValueError):
            core.path(3).relabel([0, 0, 1])


class TestDegreeHistogram:
    def test_star(self) -> None:
        hist = degree_histogram(core.star(5))
        assert hist.counts == (0, 4, 0, 0, 1)
        assert hist.total == 5
        assert hist.degree_sum == 8

    def test_empty_graph(self) -> None:
        assert degree_histogram(core.empty(3)).counts == (3, 0, 0)


class TestLargestComponent:
    def test_picks_biggest_and_relabels(self) -> None:
        g = Graph.from_edges(7, [(0, 1), (2, 3), (3, 4), (4, 5)])
        lc = core.largest_component(g)
        assert lc.n == 4
        assert list(lc.edges()) == [(0, 1), (1, 2), (2, 3)]

    def test_tie_prefers_lowest_vertex(self) -> None:
        g = Graph.from_edges(4, [(2, 3), (0, 1)])
        lc = core.largest_component(g)
        assert lc.n == 2
        assert lc.edge_count == 1

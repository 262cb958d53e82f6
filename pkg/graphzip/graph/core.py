from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    import networkx as nx


@dataclass(frozen=True, slots=True)
class Graph:
    """Undirected simple graph over dense vertex ids ``0..n-1``.

    Instances are immutable and safe to share across threads. Build them with
    :meth:`from_edges` (or one of the loaders/generators); the constructor
    trusts its arguments.
    """

    n: int
    adjacency: tuple[frozenset[int], ...]
    edge_count: int

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph, ignoring duplicate edges and self-loops."""
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        neighbors: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                continue
            neighbors[u].add(v)
            neighbors[v].add(u)
        edge_count = sum(len(s) for s in neighbors) // 2
        return cls(
            n=n,
            adjacency=tuple(frozenset(s) for s in neighbors),
            edge_count=edge_count,
        )

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> Graph:
        """Relabel *graph* onto dense ids in sorted node order."""
        order = {node: i for i, node in enumerate(sorted(graph.nodes))}
        return cls.from_edges(
            len(order), ((order[u], order[v]) for u, v in graph.edges)
        )

    def to_networkx(self) -> nx.Graph:
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, in sorted order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in sorted(nbrs):
                if u < v:
                    yield u, v

    def relabel(self, permutation: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``permutation[v]``."""
        if sorted(permutation) != list(range(self.n)):
            raise ValueError("permutation must be a rearrangement of 0..n-1")
        return Graph.from_edges(
            self.n, ((permutation[u], permutation[v]) for u, v in self.edges())
        )


@dataclass(frozen=True, slots=True)
class DegreeDistribution:
    """``counts[k]`` is the number of vertices of degree ``k``."""

    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def degree_sum(self) -> int:
        return sum(k * c for k, c in enumerate(self.counts))


def degree_histogram(g: Graph) -> DegreeDistribution:
    counts = [0] * g.n
    for nbrs in g.adjacency:
        counts[len(nbrs)] += 1
    return DegreeDistribution(counts=tuple(counts))


def empty(n: int) -> Graph:
    return Graph.from_edges(n, ())


def complete(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((v, v + 1) for v in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"a simple cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, ((v, (v + 1) % n) for v in range(n)))


def star(n: int) -> Graph:
    """Star with center 0 and ``n - 1`` leaves."""
    return Graph.from_edges(n, ((0, v) for v in range(1, n)))


def largest_component(g: Graph) -> Graph:
    """Restrict *g* to its largest connected component, relabeled densely."""
    import networkx as nx

    if g.n == 0:
        return g
    nxg = g.to_networkx()
    nodes = max(nx.connected_components(nxg), key=lambda c: (len(c), -min(c)))
    return Graph.from_networkx(nxg.subgraph(nodes))

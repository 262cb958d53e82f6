from __future__ import annotations

from graphzip.exceptions import UnsupportedGraphError
from graphzip.graph.core import Graph

MAX_EXHAUSTIVE_VERTICES = 12


def is_isomorphic_small(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test by backtracking over degree-compatible mappings.

    Only graphs with at most :data:`MAX_EXHAUSTIVE_VERTICES` vertices are
    accepted; use a re-encoding fixed-point check for anything larger.
    """
    if max(g1.n, g2.n) > MAX_EXHAUSTIVE_VERTICES:
        raise UnsupportedGraphError(
            f"exhaustive isomorphism supports n <= {MAX_EXHAUSTIVE_VERTICES}, "
            f"got {g1.n} and {g2.n}"
        )
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    deg1, deg2 = g1.degrees(), g2.degrees()
    if sorted(deg1) != sorted(deg2):
        return False

    # Most constrained vertices first.
    order = sorted(range(g1.n), key=lambda v: -deg1[v])
    mapping: dict[int, int] = {}
    used = [False] * g2.n

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        for w in range(g2.n):
            if used[w] or deg2[w] != deg1[v]:
                continue
            if any(g1.has_edge(v, u) != g2.has_edge(w, x) for u, x in mapping.items()):
                continue
            mapping[v] = w
            used[w] = True
            if extend(pos + 1):
                return True
            del mapping[v]
            used[w] = False
        return False

    return extend(0)

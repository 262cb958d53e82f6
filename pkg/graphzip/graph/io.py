from __future__ import annotations

import logging
import re
from pathlib import Path

from graphzip.exceptions import EdgeListParseError
from graphzip.graph.core import Graph

logger = logging.getLogger(__name__)

_COMMENT_PREFIXES = ("#", "%")
_VERTEX_COUNT_RE = re.compile(r"^#\s*n\s*=\s*(\d+)")


def load_edge_list(text: str) -> Graph:
    """Parse whitespace-separated ``u v`` pairs into a :class:`Graph`.

    Blank lines and lines starting with ``#`` or ``%`` are ignored, extra
    columns (weights, timestamps) too. Vertex ids are compacted onto
    ``0..k-1`` unless a ``# n=<count>`` comment declares the vertex count,
    which is how :func:`write_edge_list` keeps isolated vertices. Duplicate
    edges and self-loops are dropped and reported with a single warning.
    """
    pairs: list[tuple[int, int]] = []
    ids: set[int] = set()
    declared_n: int | None = None
    self_loops = 0

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(_COMMENT_PREFIXES):
            if declared_n is None and (m := _VERTEX_COUNT_RE.match(line)):
                declared_n = int(m.group(1))
            continue
        tokens = line.split()
        if len(tokens) < 2:
            raise EdgeListParseError(line_number, raw, "expected two vertex ids")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListParseError(
                line_number, raw, "vertex ids must be integers"
            ) from None
        if u < 0 or v < 0:
            raise EdgeListParseError(line_number, raw, "vertex ids must be >= 0")
        if declared_n is not None and max(u, v) >= declared_n:
            raise EdgeListParseError(
                line_number, raw, f"vertex id exceeds declared n={declared_n}"
            )
        ids.add(u)
        ids.add(v)
        if u == v:
            self_loops += 1
            continue
        pairs.append((u, v))

    if declared_n is not None:
        graph = Graph.from_edges(declared_n, pairs)
    else:
        compact = {vid: i for i, vid in enumerate(sorted(ids))}
        if ids and len(compact) != max(ids) + 1:
            logger.info(
                "Compacted %d vertex ids onto 0..%d", max(ids) + 1, len(compact) - 1
            )
        graph = Graph.from_edges(
            len(compact), ((compact[u], compact[v]) for u, v in pairs)
        )

    duplicates = len(pairs) - graph.edge_count
    if duplicates or self_loops:
        logger.warning(
            "Dropped %d duplicate edge(s) and %d self-loop(s) from edge list",
            duplicates,
            self_loops,
        )
    return graph


def read_graph(path: str | Path) -> Graph:
    return load_edge_list(Path(path).read_text(encoding="utf-8"))


def write_edge_list(g: Graph) -> str:
    """Canonical ``u v`` lines (``u < v``, sorted) under a ``# n=`` header."""
    header = f"# n={g.n} m={g.edge_count}\n"
    return header + "".join(f"{u} {v}\n" for u, v in g.edges())

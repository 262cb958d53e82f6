from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from graphzip.exceptions import GraphDomainError
from graphzip.graph.core import Graph

DEFAULT_TOL = 1e-8


def graph_from_precision(omega: ArrayLike, tol: float = DEFAULT_TOL) -> Graph:
    """Conditional-independence graph of a precision matrix.

    Edge ``(i, j)`` for ``i != j`` iff ``|omega[i, j]| > tol``.
    """
    matrix = np.asarray(omega, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise GraphDomainError(f"precision matrix must be square, got {matrix.shape}")
    support = np.abs(matrix) > tol
    np.fill_diagonal(support, False)
    # An entry in either triangle makes the edge.
    support |= support.T
    rows, cols = np.nonzero(np.triu(support, k=1))
    edges = zip(rows.tolist(), cols.tolist(), strict=True)
    return Graph.from_edges(matrix.shape[0], edges)

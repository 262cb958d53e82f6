"""Maximum-likelihood covariance completion under a fixed graph.

The completed covariance agrees with the sample covariance on the diagonal
and on the graph's edges, and its inverse is zero on every non-edge.
"""

from __future__ import annotations

import logging
from enum import StrEnum

import networkx as nx
import numpy as np
from numpy.typing import ArrayLike
from scipy import linalg

from graphzip.exceptions import CompletionError, GraphDomainError
from graphzip.graph.core import Graph
from graphzip.mdl.gaussian import Matrix, is_positive_definite

logger = logging.getLogger(__name__)

COMPLETION_TOL = 1e-7
MAX_SWEEPS = 1000


class CompletionMethod(StrEnum):
    REGRESSION = "regression"
    IPF = "ipf"


def _support(g: Graph) -> np.ndarray:
    mask = np.eye(g.n, dtype=bool)
    for u, v in g.edges():
        mask[u, v] = mask[v, u] = True
    return mask


def completion_residual(S: Matrix, g: Graph, sigma: Matrix) -> float:
    """Worst constraint violation of *sigma* as a completion of *S* on *g*.

    Matched entries are compared in correlation units; non-edge entries of
    the inverse are normalized by their diagonal.
    """
    support = _support(g)
    d = np.sqrt(np.diag(S))
    matched = np.abs(sigma - S)[support] / np.outer(d, d)[support]
    try:
        precision = linalg.inv(sigma)
    except linalg.LinAlgError:
        return float("inf")
    q = np.sqrt(np.abs(np.diag(precision)))
    free = ~support
    zeros = np.abs(precision)[free] / np.outer(q, q)[free] if free.any() else [0.0]
    return float(max(np.max(matched), np.max(zeros)))


def _regression(
    S: Matrix,
    g: Graph,
    tol: float,
    max_sweeps: int,
    initial: Matrix | None,
) -> tuple[Matrix, float, int]:
    p = S.shape[0]
    W = S.copy() if initial is None else np.array(initial, dtype=np.float64)
    np.fill_diagonal(W, np.diag(S))
    others = [np.delete(np.arange(p), j) for j in range(p)]
    neighbors = [np.array(sorted(g.neighbors(j)), dtype=int) for j in range(p)]
    residual = np.inf
    for sweep in range(1, max_sweeps + 1):
        for j in range(p):
            rest, nb = others[j], neighbors[j]
            if len(nb) == 0:
                W[rest, j] = W[j, rest] = 0.0
                continue
            try:
                beta = linalg.solve(W[np.ix_(nb, nb)], S[nb, j], assume_a="pos")
            except linalg.LinAlgError as exc:
                raise CompletionError(f"singular block at column {j}: {exc}") from exc
            column = W[np.ix_(rest, nb)] @ beta
            W[rest, j] = W[j, rest] = column
        residual = completion_residual(S, g, W)
        logger.debug("completion sweep %d residual %.3e", sweep, residual)
        if residual < tol:
            return W, residual, sweep
    raise CompletionError(
        f"regression completion did not converge in {max_sweeps} sweeps", residual
    )


def _ipf(
    S: Matrix, g: Graph, tol: float, max_sweeps: int
) -> tuple[Matrix, float, int]:
    cliques = [sorted(c) for c in nx.find_cliques(g.to_networkx())]
    K = np.diag(1.0 / np.diag(S))
    targets = [linalg.inv(S[np.ix_(c, c)]) for c in cliques]
    residual = np.inf
    for sweep in range(1, max_sweeps + 1):
        for clique, target in zip(cliques, targets, strict=True):
            sigma = linalg.inv(K)
            block = np.ix_(clique, clique)
            K[block] += target - linalg.inv(sigma[block])
            K = (K + K.T) / 2
        sigma = linalg.inv(K)
        residual = completion_residual(S, g, sigma)
        logger.debug("IPF sweep %d residual %.3e", sweep, residual)
        if residual < tol:
            return sigma, residual, sweep
    raise CompletionError(f"IPF did not converge in {max_sweeps} sweeps", residual)


def dempster_complete(
    S: ArrayLike,
    g: Graph,
    *,
    method: CompletionMethod = CompletionMethod.REGRESSION,
    tol: float = COMPLETION_TOL,
    max_sweeps: int = MAX_SWEEPS,
    initial: ArrayLike | None = None,
) -> Matrix:
    """Completed covariance of *S* under graph *g*.

    *initial* warm-starts the regression sweeps from an earlier completion
    (for example the previous sample's).
    """
    emp = np.asarray(S, dtype=np.float64)
    if emp.ndim != 2 or emp.shape != (g.n, g.n):
        raise GraphDomainError(
            f"covariance shape {emp.shape} does not match a {g.n}-vertex graph"
        )
    if not is_positive_definite(emp):
        raise CompletionError("sample covariance is not positive definite")
    if method is CompletionMethod.IPF:
        sigma, residual, sweeps = _ipf(emp, g, tol, max_sweeps)
    else:
        start = None if initial is None else np.asarray(initial, dtype=np.float64)
        sigma, residual, sweeps = _regression(emp, g, tol, max_sweeps, start)
    if not is_positive_definite(sigma):
        raise CompletionError("completed covariance is not positive definite", residual)
    logger.debug("completed with %s in %d sweeps", method, sweeps)
    return (sigma + sigma.T) / 2

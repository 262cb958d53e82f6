"""Sequential (predictive) description length of Gaussian data under a graph.

Sample ``i`` is coded with the zero-mean Gaussian whose covariance is the
completion, under the graph, of the sample covariance of samples
``0..i-1``. The first ``warmup`` samples use a standard normal.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike
from scipy.stats import multivariate_normal

from graphzip.exceptions import GraphDomainError
from graphzip.graph.core import Graph
from graphzip.mdl.completion import CompletionMethod, dempster_complete
from graphzip.mdl.gaussian import (
    Matrix,
    Normalization,
    is_positive_definite,
    sample_covariance,
)

logger = logging.getLogger(__name__)

SHRINKAGE = 1e-3
EXACT_REFIT_LIMIT = 500
REFIT_DIVISIONS = 100


@dataclass(frozen=True, slots=True)
class PredictiveResult:
    bits: float
    shrunk: bool
    warmup: int
    refits: int


def default_warmup(n_samples: int, p: int) -> int:
    return min(2 * p, math.ceil(n_samples / 4))


def refit_interval(n_samples: int) -> int:
    """Samples between covariance refits: 1 up to 500 samples, else N/100."""
    if n_samples <= EXACT_REFIT_LIMIT:
        return 1
    return math.ceil(n_samples / REFIT_DIVISIONS)


def shrink(S: Matrix) -> Matrix:
    """``S + 1e-3 * trace(S) / p * I`` (or ``1e-3 * I`` for a zero trace)."""
    p = S.shape[0]
    scale = float(np.trace(S)) / p or 1.0
    return S + SHRINKAGE * scale * np.eye(p)


def gaussian_bits(rows: Matrix, covariance: Matrix) -> float:
    """Codelength of *rows* under ``N(0, covariance)``, in bits."""
    logpdf = multivariate_normal.logpdf(
        rows, mean=np.zeros(covariance.shape[0]), cov=covariance
    )
    return float(-np.sum(logpdf) / math.log(2))


def predictive_mdl(
    X: ArrayLike,
    g: Graph,
    warmup: int | None = None,
    *,
    normalization: Normalization = Normalization.BIASED,
    method: CompletionMethod = CompletionMethod.REGRESSION,
) -> PredictiveResult:
    data = np.asarray(X, dtype=np.float64)
    if data.ndim != 2:
        raise GraphDomainError(f"expected an N x p matrix, got {data.shape}")
    n_samples, p = data.shape
    if p != g.n:
        raise GraphDomainError(f"data has {p} columns but the graph {g.n} vertices")
    warmup = default_warmup(n_samples, p) if warmup is None else warmup
    if not 1 <= warmup < n_samples:
        raise GraphDomainError(
            f"warmup must lie in [1, {n_samples - 1}], got {warmup}"
        )

    bits = gaussian_bits(data[:warmup], np.eye(p))
    interval = refit_interval(n_samples)
    shrunk = False
    refits = 0
    previous: Matrix | None = None
    for start in range(warmup, n_samples, interval):
        stop = min(start + interval, n_samples)
        S = sample_covariance(data[:start], normalization)
        if not is_positive_definite(S):
            S = shrink(S)
            shrunk = True
        sigma = dempster_complete(S, g, method=method, initial=previous)
        previous = sigma
        refits += 1
        bits += gaussian_bits(data[start:stop], sigma)
    logger.debug(
        "predictive MDL %.1f bits (%d edges, %d refits, shrunk=%s)",
        bits,
        g.edge_count,
        refits,
        shrunk,
    )
    return PredictiveResult(bits=bits, shrunk=shrunk, warmup=warmup, refits=refits)

"""Observation matrices, sample covariances and Gaussian sampling."""

from __future__ import annotations

import logging
import re
from enum import StrEnum

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import linalg
from sklearn.covariance import empirical_covariance

from graphzip.exceptions import GraphDomainError

logger = logging.getLogger(__name__)

type Matrix = NDArray[np.float64]

_SEPARATORS = re.compile(r"[,\s;]+")


class Normalization(StrEnum):
    BIASED = "biased"
    UNBIASED = "unbiased"


def load_matrix(text: str) -> Matrix:
    """Parse a CSV or whitespace matrix, one observation per row.

    Blank lines and ``#`` comments are skipped; a non-numeric first row is
    taken as a column header.
    """
    rows: list[list[float]] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = [t for t in _SEPARATORS.split(line) if t]
        try:
            values = [float(t) for t in tokens]
        except ValueError:
            if not rows:
                logger.info("line %d looks like a header; skipping", line_number)
                continue
            raise GraphDomainError(
                f"line {line_number}: non-numeric value in {raw!r}"
            ) from None
        if rows and len(values) != len(rows[0]):
            raise GraphDomainError(
                f"line {line_number}: expected {len(rows[0])} columns, "
                f"got {len(values)}"
            )
        rows.append(values)
    if not rows:
        raise GraphDomainError("no numeric rows found")
    matrix = np.array(rows, dtype=np.float64)
    if not np.all(np.isfinite(matrix)):
        raise GraphDomainError("matrix contains non-finite values")
    return matrix


def standardize(X: ArrayLike) -> Matrix:
    """Scale each column to unit root-mean-square; constant-zero columns stay."""
    data = np.asarray(X, dtype=np.float64)
    scale = np.sqrt(np.mean(data**2, axis=0))
    scale[scale == 0] = 1.0
    return data / scale


def sample_covariance(
    X: ArrayLike,
    normalization: Normalization = Normalization.BIASED,
    standardize_columns: bool = False,
) -> Matrix:
    """``X^T X / N`` (or ``/ (N - 1)``) around a zero mean."""
    data = np.asarray(X, dtype=np.float64)
    if data.ndim != 2 or data.shape[0] == 0:
        raise GraphDomainError(f"expected a non-empty N x p matrix, got {data.shape}")
    if standardize_columns:
        data = standardize(data)
    n = data.shape[0]
    S = empirical_covariance(data, assume_centered=True)
    if normalization is Normalization.UNBIASED and n > 1:
        S = S * (n / (n - 1))
    return (S + S.T) / 2


def sample_gaussian(omega: ArrayLike, n: int, seed: int | None = None) -> Matrix:
    """Draw *n* zero-mean rows with covariance ``omega^-1``.

    With ``omega = L L^T`` the rows are ``z L^{-1}`` for standard normal
    ``z``, which has covariance ``(L L^T)^{-1}``.
    """
    precision = np.asarray(omega, dtype=np.float64)
    if precision.ndim != 2 or precision.shape[0] != precision.shape[1]:
        raise GraphDomainError(f"precision must be square, got {precision.shape}")
    try:
        lower = linalg.cholesky(precision, lower=True)
    except linalg.LinAlgError:
        raise GraphDomainError("precision matrix is not positive definite") from None
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((n, precision.shape[0]))
    return linalg.solve_triangular(lower, z.T, lower=True, trans="T").T


def is_positive_definite(matrix: Matrix) -> bool:
    try:
        linalg.cholesky(matrix, lower=True)
    except linalg.LinAlgError:
        return False
    return True

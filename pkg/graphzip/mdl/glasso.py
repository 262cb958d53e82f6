"""Graphical lasso on top of scikit-learn's coordinate descent solver.

scikit-learn sweeps the columns of the working covariance ``W`` and solves
each lasso subproblem with its compiled Gram coordinate descent. Only
off-diagonal entries are penalized, so ``diag(W) == diag(S)`` throughout.
This module adds the acceptance rules: convergence is judged on the duality
gap, and every returned solution carries an optimality certificate.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike
from scipy import linalg
from sklearn import covariance as sk_covariance
from sklearn.exceptions import ConvergenceWarning

from graphzip.exceptions import GraphDomainError, SolverConvergenceError
from graphzip.mdl.gaussian import Matrix

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-5
DEFAULT_MAX_ITER = 500
KKT_TOLERANCE = 1e-4
# Inner lasso tolerance relative to the outer duality-gap tolerance.
_ENET_TOL_RATIO = 1e-1


@dataclass(frozen=True, slots=True)
class GlassoResult:
    precision: Matrix
    covariance: Matrix
    iterations: int
    kkt_residual: float


def dual_gap(S: Matrix, precision: Matrix, lam: float) -> float:
    """``tr(S Omega) - p + lam * sum_{i != j} |omega_ij|``; zero at the optimum."""
    gap = float(np.sum(S * precision)) - precision.shape[0]
    off = np.abs(precision).sum() - np.abs(np.diag(precision)).sum()
    return gap + lam * float(off)


def kkt_residual(
    S: Matrix, precision: Matrix, covariance: Matrix, lam: float
) -> float:
    """Largest violation of the optimality conditions off the diagonal.

    Nonzero precision entries need ``W_ij - S_ij == lam * sign(omega_ij)``;
    zero entries need ``|W_ij - S_ij| <= lam``.
    """
    gap = covariance - S
    off = ~np.eye(S.shape[0], dtype=bool)
    active = off & (precision != 0)
    inactive = off & (precision == 0)
    residual = 0.0
    if active.any():
        target = lam * np.sign(precision[active])
        residual = float(np.max(np.abs(gap[active] - target)))
    if inactive.any():
        excess = np.abs(gap[inactive]) - lam
        residual = max(residual, float(np.max(excess, initial=0.0)))
    return residual


def graphical_lasso(
    S: ArrayLike,
    lam: float,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> GlassoResult:
    """L1-penalized maximum-likelihood precision for sample covariance *S*.

    Raises :class:`SolverConvergenceError` when the duality gap is still
    above *tol* after *max_iter* sweeps, when the solver hits an
    ill-conditioned system, or when the optimality check fails.
    """
    emp = np.asarray(S, dtype=np.float64)
    if emp.ndim != 2 or emp.shape[0] != emp.shape[1]:
        raise GraphDomainError(f"covariance must be square, got {emp.shape}")
    if lam < 0:
        raise GraphDomainError(f"lambda must be non-negative, got {lam}")
    p = emp.shape[0]

    if lam == 0:
        try:
            precision = linalg.inv(emp)
        except linalg.LinAlgError:
            raise GraphDomainError(
                "lambda = 0 needs an invertible covariance"
            ) from None
        precision = (precision + precision.T) / 2
        return GlassoResult(precision, emp.copy(), 0, 0.0)

    if p == 1:
        precision = np.array([[1.0 / emp[0, 0]]])
        return GlassoResult(precision, emp.copy(), 0, 0.0)

    try:
        with warnings.catch_warnings():
            # Non-convergence is decided below from the duality gap.
            warnings.simplefilter("ignore", ConvergenceWarning)
            W, precision, iterations = sk_covariance.graphical_lasso(
                emp,
                alpha=lam,
                mode="cd",
                tol=tol,
                enet_tol=tol * _ENET_TOL_RATIO,
                max_iter=max_iter,
                return_n_iter=True,
            )
    except FloatingPointError as exc:
        raise SolverConvergenceError(
            f"graphical lasso is ill-conditioned at lambda={lam}: {exc}", np.inf
        ) from exc

    gap = abs(dual_gap(emp, precision, lam))
    logger.debug("glasso lam=%.4f: %d sweeps, dual gap %.3e", lam, iterations, gap)
    if gap >= tol:
        raise SolverConvergenceError(
            f"graphical lasso did not converge in {max_iter} sweeps at lambda={lam}",
            gap,
        )

    precision = (precision + precision.T) / 2
    residual = kkt_residual(emp, precision, W, lam)
    if residual > KKT_TOLERANCE * max(1.0, float(np.max(np.diag(emp)))):
        raise SolverConvergenceError(
            f"graphical lasso optimality check failed at lambda={lam}", residual
        )
    return GlassoResult(precision, W, iterations, residual)

"""Synthetic precision matrices with known conditional-independence graphs."""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum

import numpy as np

from graphzip.exceptions import GraphDomainError
from graphzip.graph.core import Graph
from graphzip.graph.precision import graph_from_precision
from graphzip.mdl.gaussian import Matrix

SHIFT_MARGIN = 0.05


class PrecisionFamily(StrEnum):
    CYCLE = "cycle"
    AR1 = "ar1"
    ERDOS_RENYI = "er"
    HUB = "hub"


@dataclass(frozen=True, slots=True)
class PrecisionSpec:
    family: PrecisionFamily
    p: int
    seed: int | None = None


def _banded(p: int) -> Matrix:
    omega = np.eye(p)
    idx = np.arange(p - 1)
    omega[idx, idx + 1] = omega[idx + 1, idx] = 0.5
    return omega


def _shift_to_definite(omega1: Matrix) -> Matrix:
    # Diagonal set to |lambda_min| + margin.
    rho = abs(float(np.linalg.eigvalsh(omega1).min()))
    return omega1 + (rho + SHIFT_MARGIN) * np.eye(omega1.shape[0])


def _erdos_renyi(p: int, rng: np.random.Generator) -> Matrix:
    upper = np.triu(rng.random((p, p)) < 2.0 / p, k=1)
    values = rng.uniform(0.4, 0.8, size=(p, p))
    omega1 = np.where(upper, values, 0.0)
    return _shift_to_definite(omega1 + omega1.T)


def _hub(p: int, rng: np.random.Generator) -> Matrix:
    support = rng.random((p, p)) < 0.01
    for hub in rng.choice(p, size=min(2, p), replace=False):
        support[hub, :] = rng.random(p) < 0.7
        support[:, hub] = rng.random(p) < 0.7
    np.fill_diagonal(support, False)
    magnitude = rng.uniform(0.25, 0.75, size=(p, p))
    sign = np.where(rng.random((p, p)) < 0.5, -1.0, 1.0)
    a = np.where(support, sign * magnitude, 0.0)
    return _shift_to_definite((a + a.T) / 2)


def generate_precision(spec: PrecisionSpec) -> Matrix:
    """Positive-definite precision matrix of the requested structure.

    * cycle: unit diagonal, 0.5 on the first off-diagonals, 0.4 in the corners;
    * ar1: unit diagonal, 0.5 on the first off-diagonals;
    * er: ``U(0.4, 0.8)`` entries with probability ``2 / p``, shifted;
    * hub: sparse ``+-U(0.25, 0.75)`` entries plus two dense hub rows, shifted.

    Shifted matrices add ``(|lambda_min| + 0.05) I`` to the symmetric
    off-diagonal part.
    """
    p = spec.p
    if p < 2:
        raise GraphDomainError(f"precision matrices need p >= 2, got {p}")
    rng = np.random.default_rng(spec.seed)
    match spec.family:
        case PrecisionFamily.AR1:
            return _banded(p)
        case PrecisionFamily.CYCLE:
            if p < 3:
                raise GraphDomainError("a cycle structure needs p >= 3")
            omega = _banded(p)
            omega[0, p - 1] = omega[p - 1, 0] = 0.4
            return omega
        case PrecisionFamily.ERDOS_RENYI:
            return _erdos_renyi(p, rng)
        case PrecisionFamily.HUB:
            return _hub(p, rng)


def true_graph(omega: Matrix) -> Graph:
    return graph_from_precision(omega)

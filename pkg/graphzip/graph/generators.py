"""Seeded random-graph models.

Every model is a small frozen dataclass; :func:`generate` dispatches on its
type and is a pure function of ``(model, seed)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import networkx as nx

from graphzip.exceptions import GraphDomainError
from graphzip.graph import core
from graphzip.graph.core import Graph


@dataclass(frozen=True, slots=True)
class ErdosRenyi:
    n: int
    p: float


@dataclass(frozen=True, slots=True)
class BarabasiAlbert:
    n: int
    m: int


@dataclass(frozen=True, slots=True)
class WattsStrogatz:
    n: int
    k: int
    beta: float


@dataclass(frozen=True, slots=True)
class Empty:
    n: int


@dataclass(frozen=True, slots=True)
class Complete:
    n: int


type GraphModel = ErdosRenyi | BarabasiAlbert | WattsStrogatz | Empty | Complete


def _check_n(n: int) -> None:
    if n < 0:
        raise GraphDomainError(f"vertex count must be non-negative, got {n}")


def generate(model: GraphModel, seed: int | None = None) -> Graph:
    """Draw one graph from *model*; identical ``(model, seed)`` give identical edges."""
    _check_n(model.n)
    match model:
        case ErdosRenyi(n=n, p=p):
            if not 0.0 <= p <= 1.0:
                raise GraphDomainError(f"ER needs 0 <= p <= 1, got {p}")
            if p < 0.2:
                nxg = nx.fast_gnp_random_graph(n, p, seed=seed)
            else:
                nxg = nx.gnp_random_graph(n, p, seed=seed)
        case BarabasiAlbert(n=n, m=m):
            if not 1 <= m < n:
                raise GraphDomainError(f"BA needs 1 <= m < n, got m={m}, n={n}")
            nxg = nx.barabasi_albert_graph(n, m, seed=seed)
        case WattsStrogatz(n=n, k=k, beta=beta):
            if k % 2 or not 0 <= k < n:
                raise GraphDomainError(f"WS needs even k with 0 <= k < n, got k={k}")
            if not 0.0 <= beta <= 1.0:
                raise GraphDomainError(f"WS rewiring must be in [0, 1], got {beta}")
            nxg = nx.watts_strogatz_graph(n, k, beta, seed=seed)
        case Empty(n=n):
            return core.empty(n)
        case Complete(n=n):
            return core.complete(n)
    return Graph.from_networkx(nxg)


_MODEL_RE = re.compile(r"^\s*(\w+)\s*\(\s*([^)]*)\)\s*$")


def parse_model(text: str) -> GraphModel:
    """Parse ``"er(1000, 0.02)"``, ``"ba(100, 3)"``, ``"ws(1000, 20, 0.1)"`` etc."""
    match = _MODEL_RE.match(text)
    if match is None:
        raise GraphDomainError(f"cannot parse graph model {text!r}")
    name = match.group(1).lower()
    args = [a.strip() for a in match.group(2).split(",") if a.strip()]
    try:
        match name, args:
            case "er", [n, p]:
                return ErdosRenyi(int(n), float(p))
            case "ba", [n, m]:
                return BarabasiAlbert(int(n), int(m))
            case "ws", [n, k, beta]:
                return WattsStrogatz(int(n), int(k), float(beta))
            case "empty", [n]:
                return Empty(int(n))
            case "complete", [n]:
                return Complete(int(n))
    except ValueError as exc:
        raise GraphDomainError(f"bad parameters in {text!r}: {exc}") from exc
    raise GraphDomainError(f"unknown graph model {text!r}")

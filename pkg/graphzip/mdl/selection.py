"""Choose a Gaussian graphical model by total description length.

For each regularization value the graphical lasso gives a sparsity pattern.
Every distinct pattern is charged its compressed size plus the predictive
description length of the data under it; the cheapest pattern wins, ties
going to the larger regularization value.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from graphzip.coders.codec import encode_graph
from graphzip.coders.spec import CoderSpec, Mode
from graphzip.coders.stats import CoderStats
from graphzip.concurrency import run_parallel
from graphzip.exceptions import CoderConfigError, GraphZipError, SelectionError
from graphzip.graph.core import Graph
from graphzip.graph.precision import graph_from_precision
from graphzip.mdl.completion import CompletionMethod
from graphzip.mdl.gaussian import (
    Matrix,
    Normalization,
    sample_covariance,
    sample_gaussian,
    standardize,
)
from graphzip.mdl.glasso import DEFAULT_MAX_ITER, DEFAULT_TOL, graphical_lasso
from graphzip.mdl.metrics import f1_score
from graphzip.mdl.precision import (
    PrecisionFamily,
    PrecisionSpec,
    generate_precision,
    true_graph,
)
from graphzip.mdl.predictive import PredictiveResult, predictive_mdl
from graphzip.types import ExperimentReport, LambdaRecord, SelectionReport

logger = logging.getLogger(__name__)

DEFAULT_STEP = 0.01

type GraphKey = tuple[int, tuple[tuple[int, int], ...]]


@dataclass(frozen=True, slots=True)
class SelectionOptions:
    glasso_tol: float = DEFAULT_TOL
    glasso_max_iter: int = DEFAULT_MAX_ITER
    normalization: Normalization = Normalization.BIASED
    standardize: bool = False
    completion: CompletionMethod = CompletionMethod.REGRESSION
    warmup: int | None = None
    threads: int = 1


@dataclass(frozen=True, slots=True)
class LambdaFit:
    """Graphical lasso outcome at one regularization value."""

    lam: float
    graph: Graph | None
    iterations: int = 0
    error: str | None = None


@dataclass(frozen=True, slots=True)
class LambdaEntry:
    lam: float
    graph: Graph | None
    graph_bits: int | None = None
    data_bits: float | None = None
    shrunk: bool = False
    error: str | None = None

    @property
    def total_bits(self) -> float | None:
        if self.graph_bits is None or self.data_bits is None:
            return None
        return self.graph_bits + self.data_bits

    def to_record(self) -> LambdaRecord:
        return LambdaRecord(
            lam=self.lam,
            edges=None if self.graph is None else self.graph.edge_count,
            graph_bits=self.graph_bits,
            data_bits=self.data_bits,
            total_bits=self.total_bits,
            shrunk=self.shrunk,
            status=self.error or "ok",
        )


@dataclass(frozen=True, slots=True)
class Selection:
    lam: float
    graph: Graph
    spec: CoderSpec
    path: tuple[LambdaEntry, ...]
    n_samples: int

    @property
    def grid(self) -> list[float]:
        return [entry.lam for entry in self.path]

    def to_report(self, truth: Graph | None = None) -> SelectionReport:
        return SelectionReport(
            coder=self.spec.label,
            n_samples=self.n_samples,
            p=self.graph.n,
            lambda_grid=self.grid,
            path=[entry.to_record() for entry in self.path],
            selected_lambda=self.lam,
            selected_edges=list(self.graph.edges()),
            f1=None if truth is None else f1_score(self.graph, truth),
        )


def lambda_grid(start: float, stop: float, step: float = DEFAULT_STEP) -> list[float]:
    """Inclusive, strictly increasing grid ``start, start + step, ..., stop``."""
    if step <= 0:
        raise CoderConfigError(f"lambda step must be positive, got {step}")
    if start < 0 or stop < start:
        raise CoderConfigError(f"invalid lambda range [{start}, {stop}]")
    count = math.floor((stop - start) / step + 1e-9) + 1
    return [round(start + i * step, 10) for i in range(count)]


def default_grid(n_samples: int, p: int) -> list[float]:
    """``[0.01, 1]`` when samples outnumber variables, else ``[0.1, 1]``."""
    start = 0.01 if n_samples > p else 0.1
    return lambda_grid(start, 1.0, DEFAULT_STEP)


def _graph_key(g: Graph) -> GraphKey:
    return g.n, tuple(g.edges())


def prepare_data(X: ArrayLike, options: SelectionOptions) -> Matrix:
    data = np.asarray(X, dtype=np.float64)
    return standardize(data) if options.standardize else data


def fit_path(
    X: ArrayLike, grid: Sequence[float], options: SelectionOptions | None = None
) -> list[LambdaFit]:
    """Graphical lasso at every grid value; failures are kept as entries."""
    options = options or SelectionOptions()
    if not grid:
        raise SelectionError("the lambda grid is empty")
    if any(b <= a for a, b in zip(grid, grid[1:], strict=False)):
        raise SelectionError("the lambda grid must be strictly increasing")
    data = prepare_data(X, options)
    S = sample_covariance(data, options.normalization)

    def fit(lam: float) -> LambdaFit:
        try:
            result = graphical_lasso(
                S, lam, tol=options.glasso_tol, max_iter=options.glasso_max_iter
            )
        except GraphZipError as exc:
            logger.warning("lambda=%.4f: %s", lam, exc)
            return LambdaFit(lam, None, error=str(exc))
        return LambdaFit(lam, graph_from_precision(result.precision), result.iterations)

    fits = run_parallel(fit, list(grid), limit=options.threads)
    _check_sparsity(fits)
    return fits


def _check_sparsity(fits: Sequence[LambdaFit]) -> None:
    sizes = [(f.lam, f.graph.edge_count) for f in fits if f.graph is not None]
    for (lam_a, a), (lam_b, b) in zip(sizes, sizes[1:], strict=False):
        if b > a + 1:
            logger.warning(
                "edge count grew from %d to %d between lambda %.4f and %.4f",
                a,
                b,
                lam_a,
                lam_b,
            )


@dataclass(frozen=True, slots=True)
class _Description:
    graph_bits: int | None = None
    data: PredictiveResult | None = None
    error: str | None = None


type DataCache = dict[GraphKey, PredictiveResult | str]


def score_path(
    X: ArrayLike,
    fits: Sequence[LambdaFit],
    spec: CoderSpec,
    stats: CoderStats | None = None,
    options: SelectionOptions | None = None,
    *,
    data_cache: DataCache | None = None,
) -> Selection:
    """Charge every fitted graph its total description length and pick one.

    *data_cache* holds data codelengths (or error messages) by graph and may
    be shared between calls with different coders on the same data.
    """
    options = options or SelectionOptions()
    if spec.mode is Mode.LEARNED and stats is None:
        raise CoderConfigError(f"{spec.label} needs trained statistics")
    data = prepare_data(X, options)
    cache: DataCache = {} if data_cache is None else data_cache

    unique: dict[GraphKey, Graph] = {}
    for fit in fits:
        if fit.graph is not None:
            unique.setdefault(_graph_key(fit.graph), fit.graph)

    def describe(item: tuple[GraphKey, Graph]) -> _Description:
        key, g = item
        graph_bits = encode_graph(g, spec, stats).bit_length
        cached = cache.get(key)
        if cached is None:
            try:
                cached = predictive_mdl(
                    data,
                    g,
                    options.warmup,
                    normalization=options.normalization,
                    method=options.completion,
                )
            except GraphZipError as exc:
                cached = str(exc)
        if isinstance(cached, str):
            return _Description(graph_bits, error=cached)
        return _Description(graph_bits, cached)

    items = list(unique.items())
    descriptions = run_parallel(describe, items, limit=options.threads)
    by_key: dict[GraphKey, _Description] = {}
    for (key, _), description in zip(items, descriptions, strict=True):
        by_key[key] = description
        if description.data is not None:
            cache[key] = description.data
        elif description.error is not None:
            cache[key] = description.error

    path = tuple(_entry(fit, by_key) for fit in fits)
    best: LambdaEntry | None = None
    best_total = math.inf
    for entry in path:
        total = entry.total_bits
        # The grid is increasing, so ties move to the larger lambda.
        if total is not None and total <= best_total:
            best, best_total = entry, total
    if best is None or best.graph is None:
        raise SelectionError(f"no lambda in the grid produced a usable model ({spec})")
    logger.info(
        "%s selected lambda=%.4f with %d edges (%.1f bits)",
        spec.label,
        best.lam,
        best.graph.edge_count,
        best_total,
    )
    return Selection(best.lam, best.graph, spec, path, n_samples=data.shape[0])


def _entry(fit: LambdaFit, by_key: dict[GraphKey, _Description]) -> LambdaEntry:
    if fit.graph is None:
        return LambdaEntry(fit.lam, None, error=fit.error)
    description = by_key[_graph_key(fit.graph)]
    if description.data is None:
        return LambdaEntry(
            fit.lam, fit.graph, description.graph_bits, error=description.error
        )
    return LambdaEntry(
        fit.lam,
        fit.graph,
        description.graph_bits,
        description.data.bits,
        description.data.shrunk,
    )


def select_model(
    X: ArrayLike,
    grid: Sequence[float],
    spec: CoderSpec,
    stats: CoderStats | None = None,
    options: SelectionOptions | None = None,
) -> Selection:
    """Minimum total description length graph over *grid*."""
    fits = fit_path(X, grid, options)
    return score_path(X, fits, spec, stats, options)


def path_optimum_f1(path: Iterable[LambdaFit | LambdaEntry], truth: Graph) -> float:
    """Best F1 any graph on the path reaches against *truth*."""
    scores = [f1_score(item.graph, truth) for item in path if item.graph is not None]
    return max(scores, default=0.0)


def run_experiment(
    family: PrecisionFamily,
    p: int,
    n_samples: int,
    trials: int,
    specs: Sequence[CoderSpec],
    grid: Sequence[float] | None = None,
    seed: int = 0,
    *,
    stats: Iterable[CoderStats] = (),
    options: SelectionOptions | None = None,
    on_trial: Callable[[int, dict[str, float]], None] | None = None,
) -> ExperimentReport:
    """Mean F1 of MDL selection per coder over synthetic trials.

    Trial ``t`` draws its precision matrix and samples with seed ``seed + t``.
    """
    if trials < 1:
        raise CoderConfigError(f"trials must be positive, got {trials}")
    if not specs:
        raise CoderConfigError("run_experiment needs at least one coder spec")
    by_family = {s.family: s for s in stats}
    grid = list(grid) if grid is not None else default_grid(n_samples, p)
    totals = dict.fromkeys((spec.label for spec in specs), 0.0)
    optimum = 0.0
    for trial in range(trials):
        trial_seed = seed + trial
        omega = generate_precision(PrecisionSpec(family, p, trial_seed))
        X = sample_gaussian(omega, n_samples, trial_seed)
        truth = true_graph(omega)
        fits = fit_path(X, grid, options)
        cache: DataCache = {}
        scores: dict[str, float] = {}
        for spec in specs:
            learned = by_family.get(spec.family) if spec.mode is Mode.LEARNED else None
            selection = score_path(X, fits, spec, learned, options, data_cache=cache)
            scores[spec.label] = f1_score(selection.graph, truth)
            totals[spec.label] += scores[spec.label]
        optimum += path_optimum_f1(fits, truth)
        logger.info("trial %d/%d: %s", trial + 1, trials, scores)
        if on_trial is not None:
            on_trial(trial, scores)
    return ExperimentReport(
        family=str(family),
        p=p,
        n_samples=n_samples,
        trials=trials,
        mean_f1={label: total / trials for label, total in totals.items()},
        optimum_f1=optimum / trials,
    )

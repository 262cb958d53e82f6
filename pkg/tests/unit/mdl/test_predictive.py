from __future__ import annotations

import math

import numpy as np
import pytest
from scipy.stats import multivariate_normal, norm

from graphzip.exceptions import GraphDomainError
from graphzip.graph import core
from graphzip.mdl.gaussian import sample_covariance
from graphzip.mdl.predictive import (
    default_warmup,
    gaussian_bits,
    predictive_mdl,
    refit_interval,
    shrink,
)


def _standard_normal_bits(rows: np.ndarray) -> float:
    return float(-norm.logpdf(rows).sum() / math.log(2))


class TestSchedule:
    def test_default_warmup(self) -> None:
        assert default_warmup(60, 30) == 15
        assert default_warmup(1000, 10) == 20

    def test_refit_interval(self) -> None:
        assert refit_interval(500) == 1
        assert refit_interval(501) == 6
        assert refit_interval(10_000) == 100

    def test_shrink(self) -> None:
        S = np.diag([2.0, 4.0])
        assert np.allclose(shrink(S), S + 3e-3 * np.eye(2))
        assert np.allclose(shrink(np.zeros((2, 2))), 1e-3 * np.eye(2))


class TestPredictiveMdl:
    def test_independence_model(self, rng: np.random.Generator) -> None:
        X = rng.normal(size=(40, 3))
        warmup = 5
        expected = _standard_normal_bits(X[:warmup])
        for i in range(warmup, len(X)):
            variances = np.mean(X[:i] ** 2, axis=0)
            expected -= norm.logpdf(X[i], scale=np.sqrt(variances)).sum() / math.log(2)
        result = predictive_mdl(X, core.empty(3), warmup)
        assert result.bits == pytest.approx(expected, rel=1e-9)
        assert result.refits == len(X) - warmup
        assert not result.shrunk

    def test_last_sample_increment(self, rng: np.random.Generator) -> None:
        X = rng.normal(size=(30, 3))
        result = predictive_mdl(X, core.complete(3), warmup=29)
        S = sample_covariance(X[:29])
        last = -multivariate_normal.logpdf(X[29], mean=np.zeros(3), cov=S)
        expected = _standard_normal_bits(X[:29]) + last / math.log(2)
        assert result.bits == pytest.approx(expected, rel=1e-9)
        assert result.refits == 1

    def test_few_samples_are_shrunk(self, rng: np.random.Generator) -> None:
        X = rng.normal(size=(6, 8))
        result = predictive_mdl(X, core.empty(8))
        assert result.warmup == 2
        assert result.shrunk
        assert math.isfinite(result.bits)

    def test_gaussian_bits_of_origin(self) -> None:
        bits = gaussian_bits(np.zeros((1, 2)), np.eye(2))
        assert bits == pytest.approx(math.log2(2 * math.pi))

    @pytest.mark.parametrize("warmup", [0, 10])
    def test_warmup_range(self, rng: np.random.Generator, warmup: int) -> None:
        with pytest.raises(GraphDomainError, match="warmup"):
            predictive_mdl(rng.normal(size=(10, 2)), core.empty(2), warmup)

    def test_column_mismatch(self, rng: np.random.Generator) -> None:
        with pytest.raises(GraphDomainError):
            predictive_mdl(rng.normal(size=(10, 2)), core.empty(3))

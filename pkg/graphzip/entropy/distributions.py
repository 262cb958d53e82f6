"""Binomial, Poisson-binomial and level-conditional distributions."""

from __future__ import annotations

from collections.abc import Sequence
from functools import lru_cache

import numpy as np
from numpy.typing import NDArray
from scipy.special import gammaln

from graphzip.entropy.models import FrequencyModel
from graphzip.exceptions import ContractViolation

EPSILON = 2.0**-20

type FloatArray = NDArray[np.float64]


def clamp_probability(p: float) -> float:
    return min(max(float(p), EPSILON), 1.0 - EPSILON)


@lru_cache(maxsize=4096)
def _log_comb_row(n: int) -> FloatArray:
    k = np.arange(n + 1, dtype=np.float64)
    row = gammaln(n + 1.0) - gammaln(k + 1.0) - gammaln(n - k + 1.0)
    row.flags.writeable = False
    return row


def log_comb(n: int, k: NDArray[np.int64] | int) -> FloatArray:
    k = np.asarray(k, dtype=np.float64)
    return gammaln(n + 1.0) - gammaln(k + 1.0) - gammaln(n - k + 1.0)


def binomial_pmf(size: int, p: float) -> FloatArray:
    """``P(X = k)`` for ``k = 0..size`` with ``X ~ Binom(size, p)``."""
    if size == 0:
        return np.ones(1)
    if p <= 0.0 or p >= 1.0:
        pmf = np.zeros(size + 1)
        pmf[0 if p <= 0.0 else size] = 1.0
        return pmf
    if size == 1:
        return np.array([1.0 - p, p])
    k = np.arange(size + 1, dtype=np.float64)
    return np.exp(_log_comb_row(size) + k * np.log(p) + (size - k) * np.log1p(-p))


@lru_cache(maxsize=1 << 16)
def binomial_model(size: int, p: float) -> FrequencyModel:
    """Frequency model of ``Binom(size, p)``; ``p`` is clamped when ``size > 0``."""
    if size == 0:
        return FrequencyModel.deterministic(0)
    p = clamp_probability(p)
    if size == 1:
        return FrequencyModel.bernoulli(p)
    return FrequencyModel.from_probabilities(binomial_pmf(size, p))


def poisson_binomial_distribution(
    blocks: Sequence[tuple[int, float]], limit: int | None = None
) -> FloatArray:
    """Distribution of a sum of independent ``Binom(size, theta)`` blocks.

    Built by multiplying the blocks' generating functions (one convolution
    per block). With *limit*, only ``P(sum = 0..limit)`` is kept.
    """
    pmf = np.ones(1)
    for size, theta in blocks:
        if size == 0:
            continue
        pmf = np.convolve(pmf, binomial_pmf(size, theta))
        if limit is not None:
            pmf = pmf[: limit + 1]
    return pmf


def poisson_binomial_pmf(thetas: Sequence[float], s: int) -> float:
    """Probability that independent Bernoulli(theta) trials sum to *s*."""
    if not 0 <= s <= len(thetas):
        return 0.0
    return float(poisson_binomial_distribution([(1, t) for t in thetas], limit=s)[s])


class LevelConditional:
    """Sequential conditionals of a level's left values given their sum.

    Left value ``j`` is coded with ``P(v_j = v | v_j + ... + v_last = r)``
    where ``r`` is what remains of the target after the earlier values. The
    product of these conditionals is the joint probability of the whole level
    given its sum. Identical ``theta`` across blocks reduces to counting
    (a multivariate hypergeometric); otherwise the suffix sums' distributions
    are precomputed up to the target.
    """

    def __init__(
        self, sizes: Sequence[int], thetas: Sequence[float], target: int
    ) -> None:
        if len(sizes) != len(thetas):
            raise ContractViolation("one theta per block is required")
        self.sizes = list(sizes)
        self.thetas = [clamp_probability(t) for t in thetas]
        self.target = target
        total = sum(self.sizes)
        if not 0 <= target <= total:
            raise ContractViolation(
                f"target sum {target} infeasible for total {total}"
            )

        # after[j]: total size of blocks j+1..last.
        self._after = [0] * len(self.sizes)
        running = 0
        for j in range(len(self.sizes) - 1, -1, -1):
            self._after[j] = running
            running += self.sizes[j]

        active = {t for s, t in zip(self.sizes, self.thetas, strict=True) if s > 0}
        self.identical = len(active) <= 1
        self._suffix: list[FloatArray] = []
        if not self.identical:
            self._suffix = self._build_suffix()

    def _build_suffix(self) -> list[FloatArray]:
        # _suffix[j]: unnormalized distribution of the sum of blocks j+1..last,
        # truncated to the target and scaled so its maximum is 1.
        suffix: list[FloatArray] = [np.ones(1)] * len(self.sizes)
        current = np.ones(1)
        for j in range(len(self.sizes) - 1, -1, -1):
            suffix[j] = current
            if self.sizes[j]:
                block = binomial_pmf(self.sizes[j], self.thetas[j])
                current = np.convolve(current, block)
                current = current[: self.target + 1]
                peak = current.max()
                if peak > 0:
                    current = current / peak
        return suffix

    def support(self, j: int, remaining: int) -> tuple[int, int]:
        low = max(0, remaining - self._after[j])
        high = min(self.sizes[j], remaining)
        if low > high:
            raise ContractViolation(
                f"remaining sum {remaining} infeasible at block {j}"
            )
        return low, high

    def probabilities(self, j: int, remaining: int) -> tuple[int, FloatArray]:
        """Exact conditional over ``support(j, remaining)`` as ``(low, probs)``."""
        low, high = self.support(j, remaining)
        if low == high:
            return low, np.ones(1)
        values = np.arange(low, high + 1)
        size = self.sizes[j]
        if self.identical:
            after = self._after[j]
            log_w = log_comb(size, values) + log_comb(after, remaining - values)
            weights = np.exp(log_w - log_w.max())
        else:
            pmf = binomial_pmf(size, self.thetas[j])[low : high + 1]
            rest = self._suffix[j]
            tail = np.zeros(len(values))
            index = remaining - values
            inside = index < len(rest)
            tail[inside] = rest[index[inside]]
            weights = pmf * tail
        total = weights.sum()
        if not np.isfinite(total) or total <= 0:
            return low, np.full(len(values), 1.0 / len(values))
        return low, weights / total

    def model(self, j: int, remaining: int) -> FrequencyModel:
        low, probs = self.probabilities(j, remaining)
        if len(probs) == 1:
            return FrequencyModel.deterministic(low)
        return FrequencyModel.from_probabilities(probs, offset=low)


def level_conditional_encode(
    left_cards: Sequence[int],
    pair_totals: Sequence[int],
    thetas: Sequence[float],
    target_sum: int,
) -> list[tuple[int, FrequencyModel]]:
    """``(symbol, model)`` pairs coding *left_cards* given their sum.

    Deterministic steps are returned with single-symbol models, which the
    arithmetic coder spends no bits on.
    """
    if sum(left_cards) != target_sum:
        raise ContractViolation(
            f"left values sum to {sum(left_cards)}, expected {target_sum}"
        )
    conditional = LevelConditional(pair_totals, thetas, target_sum)
    remaining = target_sum
    pairs: list[tuple[int, FrequencyModel]] = []
    for j, value in enumerate(left_cards):
        pairs.append((value, conditional.model(j, remaining)))
        remaining -= value
    return pairs

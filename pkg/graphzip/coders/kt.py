"""Krichevsky-Trofimov sequential estimation of edge probabilities."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(slots=True)
class KtCounter:
    """``n1`` sums left values coded so far, ``n0`` the matching right values."""

    n1: int = 0
    n0: int = 0

    @property
    def estimate(self) -> float:
        return (self.n1 + 0.5) / (self.n1 + self.n0 + 1)


def kt_estimate(counter: KtCounter) -> float:
    return counter.estimate


def kt_update(counter: KtCounter, left_sum: int, right_sum: int) -> float:
    """Add a coded split to *counter*; returns the estimate for what follows."""
    if left_sum < 0 or right_sum < 0:
        raise ValueError("KT counts must be non-negative")
    counter.n1 += left_sum
    counter.n0 += right_sum
    return counter.estimate

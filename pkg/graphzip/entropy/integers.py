"""Self-delimiting integer codes and enumerative ranking of weak compositions."""

from __future__ import annotations

import math
from collections.abc import Sequence

from graphzip.entropy.bits import BitReader, BitWriter
from graphzip.exceptions import BitstreamDecodeError, GraphDomainError


def elias_delta_length(value: int) -> int:
    if value < 1:
        raise GraphDomainError(f"Elias-delta codes positive integers, got {value}")
    length = value.bit_length()
    return length + 2 * (length.bit_length() - 1)


def encode_positive_integer(value: int, out: BitWriter) -> int:
    """Write *value* (``>= 1``) as an Elias-delta codeword; returns its length."""
    if value < 1:
        raise GraphDomainError(f"Elias-delta codes positive integers, got {value}")
    length = value.bit_length()
    length_bits = length.bit_length()
    for _ in range(length_bits - 1):
        out.write(0)
    out.write_uint(length, length_bits)
    out.write_uint(value ^ (1 << (length - 1)), length - 1)
    return elias_delta_length(value)


def decode_positive_integer(source: BitReader) -> int:
    zeros = 0
    while source.read() == 0:
        zeros += 1
        if zeros > 64:
            raise BitstreamDecodeError("Elias-delta prefix too long")
    length = 1
    for _ in range(zeros):
        length = (length << 1) | source.read()
    return (1 << (length - 1)) | source.read_uint(length - 1)


def composition_count(total: int, parts: int) -> int:
    """Number of weak compositions of *total* into *parts* parts."""
    if parts == 0:
        return 1 if total == 0 else 0
    return math.comb(total + parts - 1, parts - 1)


def composition_rank_width(total: int, parts: int) -> int:
    """Bits needed to send any rank below :func:`composition_count`."""
    return (composition_count(total, parts) - 1).bit_length()


def rank_weak_composition(counts: Sequence[int]) -> int:
    """Colex rank of *counts* among weak compositions with the same sum and length.

    The composition maps to the bar positions of its stars-and-bars word,
    a ``(parts - 1)``-subset ranked by the combinatorial number system.
    """
    rank = 0
    position = -1
    for j, count in enumerate(counts[:-1]):
        position += count + 1
        rank += math.comb(position, j + 1)
    return rank


def unrank_weak_composition(rank: int, total: int, parts: int) -> list[int]:
    """Inverse of :func:`rank_weak_composition`."""
    if parts == 0:
        return []
    if not 0 <= rank < composition_count(total, parts):
        raise BitstreamDecodeError(
            f"rank {rank} out of range for compositions of {total} into {parts}"
        )
    k = parts - 1
    n = total + parts - 1
    bars = [0] * k
    offset = math.comb(n, k)
    while k > 0:
        # Step n down keeping offset == comb(n, k).
        offset = offset * (n - k) // n
        n -= 1
        if rank >= offset:
            rank -= offset
            k -= 1
            bars[k] = n
            if k < n:
                offset = offset * (k + 1) // (n - k)
    counts: list[int] = []
    previous = -1
    for bar in bars:
        counts.append(bar - previous - 1)
        previous = bar
    counts.append(total + parts - 1 - previous - 1)
    return counts

"""Exact combinatorics and lexicographic subset ranking."""
from __future__ import annotations

import math
from collections.abc import Iterator
from itertools import combinations


def binom(a: int, c: int) -> int:
    """
    Exact binomial coefficient with C(a, c) = 0 outside 0 <= c <= a.

    Args:
        a: Population size.
        c: Selection size.

    Returns:
        The exact integer coefficient.
    """
    if c < 0 or a < 0 or c > a:
        return 0
    return math.comb(a, c)


def checked_int(value: int, *, max_bits: int | None, what: str) -> int:
    """
    Return ``value`` unless it needs more than ``max_bits`` signed bits.

    ``max_bits=None`` accepts arbitrary precision.

    Raises:
        OverflowError: When the value exceeds the configured width.
    """
    if max_bits is not None and abs(value).bit_length() >= max_bits:
        raise OverflowError(f"{what} needs {abs(value).bit_length() + 1} bits, limit {max_bits}")
    return value


def lex_subsets(m: int, t: int) -> Iterator[tuple[int, ...]]:
    """t-subsets of ``range(m)`` in lexicographic order of sorted element lists."""
    return combinations(range(m), t)


def subset_rank(subset: tuple[int, ...] | list[int], m: int) -> int:
    """
    Lexicographic rank of a sorted subset of ``range(m)``.

    Inverse of :func:`subset_unrank`; agrees with the enumeration order of
    :func:`lex_subsets`.
    """
    items = sorted(subset)
    t = len(items)
    rank = 0
    prev = -1
    for pos, x in enumerate(items):
        if not 0 <= x < m or x == prev:
            raise ValueError(f"subset must hold distinct elements of range({m}), got {subset}")
        for y in range(prev + 1, x):
            rank += binom(m - y - 1, t - pos - 1)
        prev = x
    return rank


def subset_unrank(rank: int, m: int, t: int) -> tuple[int, ...]:
    """The ``rank``-th t-subset of ``range(m)`` in lexicographic order."""
    total = binom(m, t)
    if not 0 <= rank < total:
        raise ValueError(f"rank must be in [0, {total}), got {rank}")
    out: list[int] = []
    x = 0
    for pos in range(t):
        while True:
            block = binom(m - x - 1, t - pos - 1)
            if rank < block:
                break
            rank -= block
            x += 1
        out.append(x)
        x += 1
    return tuple(out)

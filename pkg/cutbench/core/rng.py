"""Seeded, portable random streams.

All randomness in cutbench goes through :func:`make_rng`. The generator is
numpy's PCG64 bit generator; numpy is pinned in the manifest so identical
seeds reproduce identical streams.
"""
from __future__ import annotations

import numpy as np

DEFAULT_SEED = 20240101


def make_rng(seed: int | None = None) -> np.random.Generator:
    """
    Build a PCG64-backed generator.

    Args:
        seed: Non-negative integer seed. ``None`` uses ``DEFAULT_SEED``.

    Returns:
        A fresh ``numpy.random.Generator``.
    """
    if seed is None:
        seed = DEFAULT_SEED
    if seed < 0:
        raise ValueError(f"seed must be >= 0, got {seed}")
    return np.random.Generator(np.random.PCG64(seed))

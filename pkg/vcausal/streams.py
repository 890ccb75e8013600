"""Deterministic random streams derived from a seed and an index.

derive_substream(seed, index) seeds a PCG64 generator with the 128-bit integer

    (splitmix64(seed) << 64) | splitmix64(index ^ 0x9E3779B97F4A7C15)

splitmix64 is the SplitMix64 step (add the golden-ratio increment, then the
finalizer); it is a bijection on 64-bit words, so distinct (seed, index) pairs
always give distinct entropy.
"""

from __future__ import annotations

import numpy as np

from vcausal.errors import DomainError

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

# index reserved for drawing random decision schedules
SCHEDULE_INDEX = 1 << 63


def splitmix64(value: int) -> int:
    z = (value + GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def _check_word(name: str, value: int) -> int:
    if not 0 <= value <= MASK64:
        raise DomainError(f"{name} must be an unsigned 64-bit integer, got {value}")
    return value


def substream_entropy(seed: int, index: int) -> int:
    seed = _check_word("seed", seed)
    index = _check_word("index", index)
    return (splitmix64(seed) << 64) | splitmix64(index ^ GOLDEN_GAMMA)


def derive_substream(seed: int, index: int) -> np.random.Generator:
    """Independent, reproducible generator for work item `index` of a run seeded with `seed`."""
    return np.random.Generator(np.random.PCG64(substream_entropy(seed, index)))

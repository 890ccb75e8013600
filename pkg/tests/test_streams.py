"""Tests for seeded substream derivation."""

import numpy as np
import pytest

from vcausal.errors import DomainError
from vcausal.streams import MASK64, SCHEDULE_INDEX, derive_substream, splitmix64, substream_entropy


def _draws(seed: int, index: int) -> np.ndarray:
    return derive_substream(seed, index).random(8)


def test_splitmix64_reference_values() -> None:
    # first outputs of the SplitMix64 generator seeded with 0
    assert splitmix64(0) == 0xE220A8397B1DCDAF
    assert splitmix64(0x9E3779B97F4A7C15) == 0x6E789E6AA1B965F4


def test_same_inputs_same_stream() -> None:
    assert np.array_equal(_draws(42, 0), _draws(42, 0))


def test_distinct_index_or_seed_gives_distinct_stream() -> None:
    assert not np.array_equal(_draws(42, 0), _draws(42, 1))
    assert not np.array_equal(_draws(42, 0), _draws(43, 0))
    assert not np.array_equal(_draws(42, 0), _draws(42, SCHEDULE_INDEX))


def test_entropy_is_injective_on_a_grid() -> None:
    values = {substream_entropy(seed, index) for seed in range(64) for index in range(64)}
    assert len(values) == 64 * 64


def test_full_word_range() -> None:
    assert 0 <= substream_entropy(MASK64, MASK64) < 1 << 128
    with pytest.raises(DomainError):
        derive_substream(-1, 0)
    with pytest.raises(DomainError):
        derive_substream(0, MASK64 + 1)

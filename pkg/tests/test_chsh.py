"""Tests for the CHSH statistic."""

import math

import pytest

from vcausal.errors import DomainError
from vcausal.optics import OPTIMAL_SETTINGS, PairSource, PolarizationAngle, chsh_exact, chsh_statistic
from vcausal.optics.chsh import LOCAL_BOUND, TSIRELSON_BOUND
from vcausal.streams import derive_substream

TRIALS = 1_000_000


def test_exact_values() -> None:
    assert chsh_exact(OPTIMAL_SETTINGS, PairSource.entangled()) == pytest.approx(2 * math.sqrt(2), abs=1e-12)
    assert chsh_exact(OPTIMAL_SETTINGS, PairSource.mixture(0.0)) == pytest.approx(math.sqrt(2), abs=1e-12)


def test_entangled_source_reaches_tsirelson_bound() -> None:
    result = chsh_statistic(OPTIMAL_SETTINGS, PairSource.entangled(), TRIALS, derive_substream(2024, 0))
    assert abs(result.s - TSIRELSON_BOUND) <= 0.02
    assert result.s > 2.7
    assert result.trials == TRIALS
    assert result.expected == pytest.approx(TSIRELSON_BOUND)
    assert result.violates_local_bound()
    assert [c.sign for c in result.correlators] == [1, -1, 1, 1]


def test_mixture_respects_local_bound() -> None:
    result = chsh_statistic(OPTIMAL_SETTINGS, PairSource.mixture(0.0), TRIALS, derive_substream(2024, 1))
    assert result.s <= LOCAL_BOUND + 4 * result.stderr
    assert result.s < 2.1
    assert not result.violates_local_bound()


def test_degenerate_settings_give_two() -> None:
    zero = PolarizationAngle(0.0)
    result = chsh_statistic((zero, zero, zero, zero), PairSource.entangled(), 4000, derive_substream(1, 0))
    assert result.s == 2.0
    assert result.stderr == 0.0


def test_correlator_rows_in_degrees() -> None:
    result = chsh_statistic(OPTIMAL_SETTINGS, PairSource.entangled(), 4000, derive_substream(3, 0))
    rows = [c.as_row() for c in result.correlators]
    assert [(r["a"], r["b"]) for r in rows] == [
        pytest.approx((0.0, 22.5)),
        pytest.approx((0.0, 67.5)),
        pytest.approx((45.0, 22.5)),
        pytest.approx((45.0, 67.5)),
    ]
    assert all(r["trials"] == 1000 for r in rows)


def test_too_few_trials() -> None:
    with pytest.raises(DomainError, match="at least 1000"):
        chsh_statistic(OPTIMAL_SETTINGS, PairSource.entangled(), 999, derive_substream(0, 0))

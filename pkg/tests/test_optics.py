"""Tests for sequential collapse, Malus' law and the pair sources."""

import math

import numpy as np
import pytest

from vcausal.errors import DomainError
from vcausal.optics import (
    DetourGeometry,
    Outcome,
    PairSource,
    Photon,
    PolarizationAngle,
    canonical_angle,
    collapse,
    collapse_first,
    conditional_transmission,
    correlation,
    detect_pair,
    joint_probability,
    malus_probability,
    malus_scan,
    marginal_scan,
    partner_census,
    sample_pairs,
)
from vcausal.streams import derive_substream

DELTAS = [math.radians(d) for d in (0.0, 22.5, 45.0, 67.5, 90.0, 112.5, 135.0, 157.5)]
ALPHAS = [PolarizationAngle(d) for d in DELTAS]
SOURCES = [PairSource.entangled(), PairSource.mixture(0.0), PairSource.mixture(PolarizationAngle.degrees(30.0))]
OUTCOME_PAIRS = [(a, b) for a in Outcome for b in Outcome]


def test_canonical_angle() -> None:
    assert canonical_angle(math.pi) == 0.0
    assert canonical_angle(-1e-300) == 0.0
    assert canonical_angle(3 * math.pi / 2) == pytest.approx(math.pi / 2)
    assert PolarizationAngle(math.pi / 4 + math.pi).theta == pytest.approx(math.pi / 4, abs=1e-12)
    assert str(PolarizationAngle.degrees(45.0)) == "45deg"


def test_angle_rejects_non_finite() -> None:
    with pytest.raises(DomainError):
        PolarizationAngle(math.inf)


def test_source_construction() -> None:
    assert PairSource.entangled().is_entangled
    assert str(PairSource.entangled()) == "entangled"
    assert not PairSource.mixture(0.0).is_entangled
    with pytest.raises(DomainError):
        PairSource(PairSource.mixture(0.0).kind)


def test_malus_probability() -> None:
    beta = PolarizationAngle.degrees(10.0)
    assert malus_probability(beta, beta) == pytest.approx(1.0)
    assert malus_probability(beta.perpendicular, beta) == pytest.approx(0.0, abs=1e-12)
    assert malus_probability(beta.rotated(math.pi / 4), beta) == pytest.approx(0.5)


def test_joint_probability_examples() -> None:
    source = PairSource.entangled()
    a = PolarizationAngle(0.3)
    tt = (Outcome.TRANSMITTED, Outcome.TRANSMITTED)
    assert joint_probability(a, a, tt, source) == pytest.approx(0.5, abs=1e-12)
    assert joint_probability(a, a.rotated(math.pi / 4), tt, source) == pytest.approx(0.25, abs=1e-12)


@pytest.mark.parametrize("source", SOURCES, ids=str)
def test_joint_probability_normalized(source: PairSource) -> None:
    for alpha in ALPHAS:
        for beta in ALPHAS:
            total = sum(joint_probability(alpha, beta, pair, source) for pair in OUTCOME_PAIRS)
            assert abs(total - 1.0) <= 1e-12


def test_entangled_joint_is_rotationally_symmetric() -> None:
    source = PairSource.entangled()
    for alpha in ALPHAS:
        for beta in ALPHAS:
            for turn in (0.1, 1.0, 2.5):
                for pair in OUTCOME_PAIRS:
                    rotated = joint_probability(alpha.rotated(turn), beta.rotated(turn), pair, source)
                    assert abs(rotated - joint_probability(alpha, beta, pair, source)) <= 1e-12


def test_mixture_joint_depends_on_axis() -> None:
    source = PairSource.mixture(0.0)
    tt = (Outcome.TRANSMITTED, Outcome.TRANSMITTED)
    diagonal = PolarizationAngle.degrees(45.0)
    assert joint_probability(PolarizationAngle(0.0), PolarizationAngle(0.0), tt, source) == pytest.approx(0.5)
    assert joint_probability(diagonal, diagonal, tt, source) == pytest.approx(0.25)


def test_collapse_first_entangled_partner() -> None:
    rng = derive_substream(5, 0)
    alpha = PolarizationAngle.degrees(20.0)
    for _ in range(50):
        outcome, partner = collapse_first(PairSource.entangled(), alpha, rng)
        expected = alpha if outcome is Outcome.TRANSMITTED else alpha.perpendicular
        assert partner == expected


def test_entangled_first_outcome_is_fair() -> None:
    transmitted, _ = collapse(PairSource.entangled(), PolarizationAngle(0.0), 100_000, derive_substream(6, 0))
    assert abs(transmitted.mean() - 0.5) <= 0.005


def test_collapse_rejects_empty_run() -> None:
    with pytest.raises(DomainError):
        collapse(PairSource.entangled(), PolarizationAngle(0.0), 0, np.random.default_rng(0))


def test_partner_census() -> None:
    alpha = PolarizationAngle(0.0)
    census = partner_census(PairSource.entangled(), alpha, 10_000, derive_substream(7, 0))
    assert set(census) == {alpha, alpha.perpendicular}
    assert sum(census.values()) == 10_000

    census = partner_census(PairSource.mixture(0.0), alpha, 10_000, derive_substream(7, 1))
    assert set(census) <= {alpha, alpha.perpendicular}

    # a mixture never re-orients the partner towards polarizer I
    axis = PolarizationAngle.degrees(30.0)
    census = partner_census(PairSource.mixture(axis), alpha, 10_000, derive_substream(7, 2))
    assert set(census) == {axis, axis.perpendicular}


@pytest.mark.parametrize("source", SOURCES, ids=str)
def test_malus_law_conditioned_on_transmission(source: PairSource) -> None:
    points = malus_scan(source, PolarizationAngle.degrees(30.0), DELTAS, 100_000, derive_substream(8, 0))
    assert len(points) == len(DELTAS)
    for point in points:
        assert point.conditioned_trials > 0
        assert abs(point.observed - point.expected) <= 4 * point.sigma + 1e-12


def test_entangled_conditional_is_cos_squared() -> None:
    alpha = PolarizationAngle.degrees(30.0)
    for delta in DELTAS:
        expected = conditional_transmission(alpha, alpha.rotated(delta), PairSource.entangled())
        assert expected == pytest.approx(math.cos(delta) ** 2, abs=1e-12)


@pytest.mark.parametrize("source", SOURCES, ids=str)
def test_no_signaling_marginal(source: PairSource) -> None:
    trials = 100_000
    sigma = math.sqrt(0.25 / trials)
    beta = PolarizationAngle.degrees(10.0)
    for alpha, frequency in marginal_scan(source, beta, ALPHAS, trials, derive_substream(9, 0)):
        assert abs(frequency - 0.5) <= 4 * sigma, alpha


def test_sampled_correlation_is_rotationally_symmetric() -> None:
    trials = 100_000
    source = PairSource.entangled()
    alpha, beta = PolarizationAngle.degrees(10.0), PolarizationAngle.degrees(40.0)
    base = sample_pairs(source, alpha, beta, trials, derive_substream(11, 0))
    turned = sample_pairs(source, alpha.rotated(1.0), beta.rotated(1.0), trials, derive_substream(11, 1))
    p = 0.5 * (1.0 + math.cos(2 * math.radians(30.0)))
    sigma = math.sqrt(2 * p * (1 - p) / trials)
    assert abs(base.agreements - turned.agreements) / trials <= 4 * sigma


def test_detect_pair_order() -> None:
    first, second = detect_pair(
        PairSource.entangled(), PolarizationAngle(0.0), PolarizationAngle(0.0), derive_substream(12, 0)
    )
    assert (first.photon, first.order_index) == (Photon.NU1, 0)
    assert (second.photon, second.order_index) == (Photon.NU2, 1)
    # equal settings on the entangled pair always agree
    assert first.outcome is second.outcome


def test_detour_geometry() -> None:
    assert DetourGeometry(arm=1.0, detour=2.5).is_time_ordered()
    assert not DetourGeometry(arm=1.0, detour=1.5).is_time_ordered()
    assert not DetourGeometry(arm=1.0, detour=2.0).is_time_ordered()
    assert DetourGeometry.minimal(3.0).is_time_ordered()
    first, second = DetourGeometry(arm=1.0, detour=2.5).detection_events()
    assert first.t < second.t
    with pytest.raises(DomainError):
        DetourGeometry(arm=0.0, detour=1.0)


def test_correlation_closed_form() -> None:
    entangled = PairSource.entangled()
    for delta in DELTAS:
        alpha = PolarizationAngle.degrees(10.0)
        beta = PolarizationAngle(float(alpha) + delta)
        assert correlation(alpha, beta, entangled) == pytest.approx(math.cos(2 * delta), abs=1e-12)
    mixture = PairSource.mixture(0.0)
    assert correlation(PolarizationAngle(0.0), PolarizationAngle(0.0), mixture) == pytest.approx(1.0)
    diagonal = PolarizationAngle.degrees(45.0)
    assert correlation(diagonal, diagonal, mixture) == pytest.approx(0.0, abs=1e-12)

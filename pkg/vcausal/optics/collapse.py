"""Sequential collapse of a photon pair measured by two polarizers.

nu1 is always detected first. Its outcome is drawn from its marginal and then
fixes the polarization nu2 carries to polarizer II. For the entangled pair this
reproduces the quantum joint distribution; for a mixture the partner simply
keeps the pair's hidden polarization.
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from vcausal.errors import DomainError
from vcausal.optics.polarization import (
    Outcome,
    PairSource,
    Photon,
    PolarizationAngle,
)

logger = logging.getLogger(__name__)

HALF_PI = math.pi / 2


def malus_probability(partner: PolarizationAngle, beta: PolarizationAngle) -> float:
    """Transmission probability cos^2 of the angle between photon and analyzer."""
    return math.cos(float(partner) - float(beta)) ** 2


def _hidden_branches(source: PairSource) -> tuple[float, float]:
    assert source.axis is not None
    axis = float(source.axis)
    return axis, axis + HALF_PI


def joint_probability(
    alpha: PolarizationAngle,
    beta: PolarizationAngle,
    outcomes: tuple[Outcome, Outcome],
    source: PairSource,
) -> float:
    """Closed-form probability of (nu1 outcome at alpha, nu2 outcome at beta)."""
    first, second = outcomes
    if source.is_entangled:
        aligned = math.cos(float(alpha) - float(beta)) ** 2
        if first is second:
            return 0.5 * aligned
        return 0.5 * (1.0 - aligned)

    total = 0.0
    for lam in _hidden_branches(source):
        p1 = math.cos(lam - float(alpha)) ** 2
        p2 = math.cos(lam - float(beta)) ** 2
        total += (p1 if first is Outcome.TRANSMITTED else 1.0 - p1) * (
            p2 if second is Outcome.TRANSMITTED else 1.0 - p2
        )
    return 0.5 * total


def correlation(alpha: PolarizationAngle, beta: PolarizationAngle, source: PairSource) -> float:
    """E(alpha, beta) = P(same) - P(different)."""
    same = sum(
        joint_probability(alpha, beta, (o, o), source) for o in Outcome
    )
    return 2.0 * same - 1.0


def conditional_transmission(
    alpha: PolarizationAngle, beta: PolarizationAngle, source: PairSource
) -> float:
    """P(nu2 transmitted at beta | nu1 transmitted at alpha)."""
    both = joint_probability(alpha, beta, (Outcome.TRANSMITTED, Outcome.TRANSMITTED), source)
    first = both + joint_probability(alpha, beta, (Outcome.TRANSMITTED, Outcome.REFLECTED), source)
    return both / first


def _canonical(angles: np.ndarray) -> np.ndarray:
    reduced = np.mod(angles, math.pi)
    return np.where(reduced >= math.pi, 0.0, reduced)


def collapse(
    source: PairSource,
    alpha: PolarizationAngle,
    trials: int,
    rng: np.random.Generator,
) -> tuple[np.ndarray, np.ndarray]:
    """Measure nu1 at alpha for many pairs.

    Returns (transmitted, partner): whether nu1 was transmitted, and the
    polarization angle nu2 is left in, canonical in [0, pi).
    """
    if trials < 1:
        raise DomainError(f"trials must be positive, got {trials}")
    a = float(alpha)
    if source.is_entangled:
        transmitted = rng.random(trials) < 0.5
        partner = np.where(transmitted, a, a + HALF_PI)
    else:
        parallel, perpendicular = _hidden_branches(source)
        hidden = np.where(rng.random(trials) < 0.5, parallel, perpendicular)
        transmitted = rng.random(trials) < np.cos(hidden - a) ** 2
        partner = hidden
    return transmitted, _canonical(partner)


def collapse_first(
    source: PairSource,
    alpha: PolarizationAngle,
    rng: np.random.Generator,
) -> tuple[Outcome, PolarizationAngle]:
    """Measure a single nu1 and report its outcome and the state nu2 is forced into."""
    transmitted, partner = collapse(source, alpha, 1, rng)
    outcome = Outcome.TRANSMITTED if transmitted[0] else Outcome.REFLECTED
    return outcome, PolarizationAngle(float(partner[0]))


@dataclass(frozen=True)
class PairSample:
    """Outcomes of many pairs measured at fixed analyzer angles."""

    alpha: PolarizationAngle
    beta: PolarizationAngle
    transmitted1: np.ndarray
    transmitted2: np.ndarray
    partner: np.ndarray

    @property
    def trials(self) -> int:
        return int(self.transmitted1.size)

    @property
    def agreements(self) -> int:
        return int(np.count_nonzero(self.transmitted1 == self.transmitted2))

    def correlation(self) -> float:
        return 2.0 * self.agreements / self.trials - 1.0


def sample_pairs(
    source: PairSource,
    alpha: PolarizationAngle,
    beta: PolarizationAngle,
    trials: int,
    rng: np.random.Generator,
) -> PairSample:
    """Detect nu1 at alpha, then nu2 at beta with Malus' law applied to its forced state."""
    transmitted1, partner = collapse(source, alpha, trials, rng)
    transmitted2 = rng.random(trials) < np.cos(partner - float(beta)) ** 2
    return PairSample(alpha, beta, transmitted1, transmitted2, partner)


@dataclass(frozen=True)
class DetectionRecord:
    """One detection; nu1 always has order_index 0."""

    photon: Photon
    analyzer: PolarizationAngle
    outcome: Outcome
    order_index: int


def detect_pair(
    source: PairSource,
    alpha: PolarizationAngle,
    beta: PolarizationAngle,
    rng: np.random.Generator,
) -> tuple[DetectionRecord, DetectionRecord]:
    """Run one pair through both polarizers, in detection order."""
    sample = sample_pairs(source, alpha, beta, 1, rng)
    first = DetectionRecord(
        Photon.NU1,
        alpha,
        Outcome.TRANSMITTED if sample.transmitted1[0] else Outcome.REFLECTED,
        order_index=0,
    )
    second = DetectionRecord(
        Photon.NU2,
        beta,
        Outcome.TRANSMITTED if sample.transmitted2[0] else Outcome.REFLECTED,
        order_index=1,
    )
    return first, second


def partner_census(
    source: PairSource,
    alpha: PolarizationAngle,
    trials: int,
    rng: np.random.Generator,
) -> Counter[PolarizationAngle]:
    """Count the polarization states nu2 is left in after nu1 is measured at alpha."""
    _, partner = collapse(source, alpha, trials, rng)
    values, counts = np.unique(partner, return_counts=True)
    return Counter({PolarizationAngle(float(v)): int(n) for v, n in zip(values, counts)})


@dataclass(frozen=True)
class MalusPoint:
    """nu2 transmission at relative angle delta, conditioned on nu1 transmitted."""

    delta: float
    expected: float
    observed: float
    conditioned_trials: int

    @property
    def sigma(self) -> float:
        if self.conditioned_trials == 0:
            return math.inf
        return math.sqrt(self.expected * (1.0 - self.expected) / self.conditioned_trials)

    def as_row(self) -> dict[str, object]:
        return {
            "delta": self.delta,
            "expected": self.expected,
            "observed": self.observed,
            "conditioned_trials": self.conditioned_trials,
            "sigma": self.sigma,
        }


def malus_scan(
    source: PairSource,
    alpha: PolarizationAngle,
    deltas: Iterable[float],
    trials: int,
    rng: np.random.Generator,
) -> list[MalusPoint]:
    """For each delta, compare conditioned nu2 transmission at alpha + delta with its closed form.

    For the entangled pair the closed form is Malus' law, cos^2(delta).
    """
    points = []
    for delta in deltas:
        beta = alpha.rotated(delta)
        sample = sample_pairs(source, alpha, beta, trials, rng)
        kept = sample.transmitted2[sample.transmitted1]
        observed = float(kept.mean()) if kept.size else math.nan
        points.append(
            MalusPoint(
                delta=delta,
                expected=conditional_transmission(alpha, beta, source),
                observed=observed,
                conditioned_trials=int(kept.size),
            )
        )
        logger.debug("malus delta=%s: observed %s over %d", delta, observed, kept.size)
    return points


def marginal_scan(
    source: PairSource,
    beta: PolarizationAngle,
    alphas: Iterable[PolarizationAngle],
    trials: int,
    rng: np.random.Generator,
) -> list[tuple[PolarizationAngle, float]]:
    """Unconditioned nu2 transmission frequency at beta for each polarizer-I angle."""
    return [
        (alpha, float(sample_pairs(source, alpha, beta, trials, rng).transmitted2.mean()))
        for alpha in alphas
    ]

"""CHSH statistic: sampled and exact."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from vcausal.errors import DomainError
from vcausal.optics.collapse import correlation, sample_pairs
from vcausal.optics.polarization import PairSource, PolarizationAngle

logger = logging.getLogger(__name__)

MIN_TRIALS = 1000

ChshSettings = tuple[PolarizationAngle, PolarizationAngle, PolarizationAngle, PolarizationAngle]

# a, a', b, b' maximizing S for the entangled pair
OPTIMAL_SETTINGS: ChshSettings = (
    PolarizationAngle.degrees(0.0),
    PolarizationAngle.degrees(45.0),
    PolarizationAngle.degrees(22.5),
    PolarizationAngle.degrees(67.5),
)

TSIRELSON_BOUND = 2.0 * math.sqrt(2.0)
LOCAL_BOUND = 2.0


def _pairs(settings: ChshSettings) -> list[tuple[PolarizationAngle, PolarizationAngle, int]]:
    a, a_prime, b, b_prime = settings
    # S = E(a,b) - E(a,b') + E(a',b) + E(a',b')
    return [(a, b, 1), (a, b_prime, -1), (a_prime, b, 1), (a_prime, b_prime, 1)]


@dataclass(frozen=True)
class Correlator:
    alpha: PolarizationAngle
    beta: PolarizationAngle
    sign: int
    value: float
    expected: float
    trials: int

    @property
    def variance(self) -> float:
        # same-outcome indicator is Bernoulli((1 + E)/2), so Var(E_hat) = (1 - E^2)/n
        return max(0.0, 1.0 - self.value * self.value) / self.trials

    def as_row(self) -> dict[str, object]:
        return {
            "a": math.degrees(float(self.alpha)),
            "b": math.degrees(float(self.beta)),
            "correlation": self.value,
            "expected": self.expected,
            "trials": self.trials,
        }


@dataclass(frozen=True)
class ChshResult:
    s: float
    stderr: float
    expected: float
    correlators: tuple[Correlator, ...]

    @property
    def trials(self) -> int:
        return sum(c.trials for c in self.correlators)

    def violates_local_bound(self, sigmas: float = 4.0) -> bool:
        return self.s - sigmas * self.stderr > LOCAL_BOUND


def chsh_exact(settings: ChshSettings, source: PairSource) -> float:
    return abs(sum(sign * correlation(a, b, source) for a, b, sign in _pairs(settings)))


def chsh_statistic(
    settings: ChshSettings,
    source: PairSource,
    trials: int,
    rng: np.random.Generator,
) -> ChshResult:
    """Estimate S by Monte Carlo, splitting trials evenly over the four setting pairs."""
    if trials < MIN_TRIALS:
        raise DomainError(f"CHSH needs at least {MIN_TRIALS} trials, got {trials}")
    per_pair = trials // 4
    correlators = []
    for alpha, beta, sign in _pairs(settings):
        sample = sample_pairs(source, alpha, beta, per_pair, rng)
        correlators.append(
            Correlator(
                alpha=alpha,
                beta=beta,
                sign=sign,
                value=sample.correlation(),
                expected=correlation(alpha, beta, source),
                trials=per_pair,
            )
        )
    s = abs(sum(c.sign * c.value for c in correlators))
    stderr = math.sqrt(sum(c.variance for c in correlators))
    logger.info("CHSH %s: S=%.5f +/- %.5f over %d trials", source, s, stderr, 4 * per_pair)
    return ChshResult(s=s, stderr=stderr, expected=chsh_exact(settings, source), correlators=tuple(correlators))

"""Single trials and blocks of the three-party experiment."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from vcausal.errors import DomainError
from vcausal.protocol.models import InfluenceModel
from vcausal.protocol.setup import GHZSource, ProtocolConfig, reachable

logger = logging.getLogger(__name__)


class Polarization(str, Enum):
    H = "H"  # transmitted
    V = "V"  # reflected


@dataclass(frozen=True)
class TrialRecord:
    """Outcomes of one trial; alice is None when she did not measure."""

    alice: Optional[Polarization]
    bob: Polarization
    charlie: Polarization
    entangled: bool

    @property
    def agree(self) -> bool:
        return self.bob is self.charlie


@dataclass(frozen=True)
class TrialBatch:
    """Outcome arrays (True = H) for many trials run with one decision."""

    alice: Optional[np.ndarray]
    bob: np.ndarray
    charlie: np.ndarray
    entangled: np.ndarray

    @property
    def trials(self) -> int:
        return int(self.bob.size)


@dataclass(frozen=True)
class BlockStats:
    """Aggregate agreement statistics of a block; blocks add associatively."""

    trials: int
    agreements: int
    alice_measured: int = 0
    alice_h: int = 0
    bob_h: int = 0
    charlie_h: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.agreements <= self.trials:
            raise DomainError(f"agreements must lie in [0, {self.trials}], got {self.agreements}")

    @property
    def agreement_rate(self) -> float:
        return self.agreements / self.trials if self.trials else 0.0

    def __add__(self, other: "BlockStats") -> "BlockStats":
        return BlockStats(
            trials=self.trials + other.trials,
            agreements=self.agreements + other.agreements,
            alice_measured=self.alice_measured + other.alice_measured,
            alice_h=self.alice_h + other.alice_h,
            bob_h=self.bob_h + other.bob_h,
            charlie_h=self.charlie_h + other.charlie_h,
        )

    @classmethod
    def from_batch(cls, batch: TrialBatch) -> "BlockStats":
        alice = batch.alice
        return cls(
            trials=batch.trials,
            agreements=int(np.count_nonzero(batch.bob == batch.charlie)),
            alice_measured=0 if alice is None else int(alice.size),
            alice_h=0 if alice is None else int(np.count_nonzero(alice)),
            bob_h=int(np.count_nonzero(batch.bob)),
            charlie_h=int(np.count_nonzero(batch.charlie)),
        )


def sample_trials(
    config: ProtocolConfig,
    source: GHZSource,
    model: InfluenceModel,
    alice_measures: bool,
    trials: int,
    rng: np.random.Generator,
) -> TrialBatch:
    """Run trials with polarizers fixed in the H/V basis.

    Each trial is GHZ-entangled with probability p; otherwise all three photons carry
    one hidden polarization, drawn fairly, whatever the model. Entangled trials are
    resolved by the model, forced by Alice only if she measures and her influence
    arrives before Bob and Charlie measure.
    """
    model.check_source(source)
    if trials < 1:
        raise DomainError(f"trials must be positive, got {trials}")

    entangled = rng.random(trials) < source.p
    hidden = rng.random(trials) < 0.5
    alice_draw = rng.random(trials) < 0.5
    influenced = alice_measures and reachable(config)

    if entangled.any():
        bob_ghz, charlie_ghz = model.correlate(alice_draw, influenced, rng)
        bob = np.where(entangled, bob_ghz, hidden)
        charlie = np.where(entangled, charlie_ghz, hidden)
    else:
        bob = hidden
        charlie = hidden
    alice = np.where(entangled, alice_draw, hidden) if alice_measures else None
    return TrialBatch(alice=alice, bob=bob, charlie=charlie, entangled=entangled)


def _polarization(value: bool) -> Polarization:
    return Polarization.H if value else Polarization.V


def run_trial(
    config: ProtocolConfig,
    source: GHZSource,
    model: InfluenceModel,
    alice_measures: bool,
    rng: np.random.Generator,
) -> TrialRecord:
    batch = sample_trials(config, source, model, alice_measures, 1, rng)
    return TrialRecord(
        alice=None if batch.alice is None else _polarization(bool(batch.alice[0])),
        bob=_polarization(bool(batch.bob[0])),
        charlie=_polarization(bool(batch.charlie[0])),
        entangled=bool(batch.entangled[0]),
    )


def run_block(
    config: ProtocolConfig,
    source: GHZSource,
    model: InfluenceModel,
    alice_decision: bool,
    rng: np.random.Generator,
) -> BlockStats:
    """config.trials independent trials, all with the same decision by the Alices."""
    stats = BlockStats.from_batch(
        sample_trials(config, source, model, alice_decision, config.trials, rng)
    )
    logger.debug(
        "block %s decision=%s: %d/%d agree",
        model.kind.value, alice_decision, stats.agreements, stats.trials,
    )
    return stats


def expected_agreement(
    config: ProtocolConfig,
    source: GHZSource,
    model: InfluenceModel,
    alice_measures: bool,
) -> float:
    """Closed-form agreement probability: p * (entangled agreement) + (1 - p)."""
    model.check_source(source)
    if source.p == 0.0:
        return 1.0
    influenced = alice_measures and reachable(config)
    return source.p * model.ghz_agreement(influenced) + (1.0 - source.p)

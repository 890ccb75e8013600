"""Reading Alice's decision off Bob's and Charlie's agreement rate."""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from scipy import stats as st

from vcausal.errors import DomainError
from vcausal.protocol.models import InfluenceModel
from vcausal.protocol.setup import GHZSource, ProtocolConfig
from vcausal.protocol.trials import BlockStats, run_block
from vcausal.streams import SCHEDULE_INDEX, derive_substream

logger = logging.getLogger(__name__)

DEFAULT_THRESHOLD = 0.75


def _check_threshold(threshold: float) -> None:
    if not 0.5 < threshold <= 1.0:
        raise DomainError(f"threshold must lie in (0.5, 1], got {threshold}")


@dataclass(frozen=True)
class Inference:
    inferred: bool
    error_bound: float


def infer_decision(stats: BlockStats, threshold: float = DEFAULT_THRESHOLD) -> Inference:
    """Guess that the Alices measured when the agreement rate reaches the threshold.

    error_bound is the one-sided Hoeffding bound exp(-2n(threshold - 1/2)^2) on
    calling a no-measurement block (agreement rate 1/2) a measurement block.
    """
    _check_threshold(threshold)
    if stats.trials < 1:
        raise DomainError("cannot infer a decision from an empty block")
    return Inference(
        inferred=stats.agreement_rate >= threshold,
        error_bound=math.exp(-2.0 * stats.trials * (threshold - 0.5) ** 2),
    )


@dataclass(frozen=True)
class SignalingBlock:
    index: int
    decision: bool
    stats: BlockStats
    inferred: bool
    error_bound: float

    @property
    def correct(self) -> bool:
        return self.inferred == self.decision

    def as_row(self) -> dict[str, object]:
        return {
            "block": self.index,
            "decision": self.decision,
            "inferred": self.inferred,
            "correct": self.correct,
            "agreements": self.stats.agreements,
            "trials": self.stats.trials,
            "agreement_rate": self.stats.agreement_rate,
        }


@dataclass(frozen=True)
class SignalingResult:
    blocks: tuple[SignalingBlock, ...]
    threshold: float

    @property
    def accuracy(self) -> float:
        if not self.blocks:
            return 0.0
        return sum(b.correct for b in self.blocks) / len(self.blocks)

    @property
    def failure_bound(self) -> float:
        """Union bound on any misclassified no-measurement block."""
        return min(1.0, sum(b.error_bound for b in self.blocks))

    def totals(self, decision: bool) -> BlockStats:
        """Pooled statistics of all blocks run with one decision."""
        pooled = BlockStats(trials=0, agreements=0)
        for block in self.blocks:
            if block.decision == decision:
                pooled = pooled + block.stats
        return pooled


class Schedule(str, Enum):
    ALTERNATING = "alternating"
    RANDOM = "random"


def decision_schedule(schedule: Schedule | str, blocks: int, seed: int) -> list[bool]:
    """Alternating (measure first) or seeded fair-coin decisions for each block."""
    if blocks < 1:
        raise DomainError(f"blocks must be positive, got {blocks}")
    if Schedule(schedule) is Schedule.ALTERNATING:
        return [i % 2 == 0 for i in range(blocks)]
    rng = derive_substream(seed, SCHEDULE_INDEX)
    return [bool(b) for b in rng.random(blocks) < 0.5]


def signaling_experiment(
    config: ProtocolConfig,
    source: GHZSource,
    model: InfluenceModel,
    decisions: Sequence[bool],
    seed: int,
    *,
    blocks: Optional[int] = None,
    threshold: float = DEFAULT_THRESHOLD,
    workers: int = 1,
) -> SignalingResult:
    """Run one block per decision and infer each decision from the lab alone.

    Block i draws from derive_substream(seed, i), so the result does not depend on
    how blocks are scheduled across workers.
    """
    if blocks is not None and blocks != len(decisions):
        raise DomainError(f"expected {blocks} decisions, got {len(decisions)}")
    if not decisions:
        raise DomainError("at least one block is required")
    model.check_source(source)
    _check_threshold(threshold)

    def run(index: int) -> SignalingBlock:
        decision = bool(decisions[index])
        block_stats = run_block(config, source, model, decision, derive_substream(seed, index))
        inference = infer_decision(block_stats, threshold)
        return SignalingBlock(index, decision, block_stats, inference.inferred, inference.error_bound)

    indices = range(len(decisions))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = tuple(pool.map(run, indices))
    else:
        results = tuple(run(i) for i in indices)

    outcome = SignalingResult(blocks=results, threshold=threshold)
    logger.info(
        "signaling %s over %d blocks: accuracy %.3f", model.kind.value, len(results), outcome.accuracy
    )
    return outcome


def compare_blocks(first: BlockStats, second: BlockStats) -> float:
    """Two-sided p-value of the pooled two-proportion z-test on agreement rates.

    Returns 1.0 when the pooled rate is 0 or 1: the blocks are then identical.
    """
    if first.trials < 1 or second.trials < 1:
        raise DomainError("both blocks need at least one trial")
    pooled = (first.agreements + second.agreements) / (first.trials + second.trials)
    variance = pooled * (1.0 - pooled) * (1.0 / first.trials + 1.0 / second.trials)
    if variance <= 0.0:
        return 1.0
    z = (first.agreement_rate - second.agreement_rate) / math.sqrt(variance)
    return float(2.0 * st.norm.sf(abs(z)))

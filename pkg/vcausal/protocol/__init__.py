"""Three-party GHZ experiment under competing causal models."""

from vcausal.protocol.models import (
    AgreementVariant,
    FiniteSpeedVCausal,
    InfluenceKind,
    InfluenceModel,
    LocalOnly,
    influence_model,
)
from vcausal.protocol.setup import GHZSource, ProtocolConfig, influence_arrival, reachable
from vcausal.protocol.signaling import (
    DEFAULT_THRESHOLD,
    Inference,
    Schedule,
    SignalingBlock,
    SignalingResult,
    compare_blocks,
    decision_schedule,
    infer_decision,
    signaling_experiment,
)
from vcausal.protocol.trials import (
    BlockStats,
    Polarization,
    TrialBatch,
    TrialRecord,
    expected_agreement,
    run_block,
    run_trial,
    sample_trials,
)

__all__ = [
    "AgreementVariant",
    "FiniteSpeedVCausal",
    "InfluenceKind",
    "InfluenceModel",
    "LocalOnly",
    "influence_model",
    "GHZSource",
    "ProtocolConfig",
    "influence_arrival",
    "reachable",
    "DEFAULT_THRESHOLD",
    "Inference",
    "Schedule",
    "SignalingBlock",
    "SignalingResult",
    "compare_blocks",
    "decision_schedule",
    "infer_decision",
    "signaling_experiment",
    "BlockStats",
    "Polarization",
    "TrialBatch",
    "TrialRecord",
    "expected_agreement",
    "run_block",
    "run_trial",
    "sample_trials",
]

"""Experiment orchestration."""

from vcausal.orchestration.config import ExperimentConfig, config_from_mapping, parse_config, with_seed
from vcausal.orchestration.output import ExperimentResult, render
from vcausal.orchestration.runner import ExperimentRunner, run_experiment

__all__ = [
    "ExperimentConfig",
    "config_from_mapping",
    "parse_config",
    "ExperimentResult",
    "render",
    "ExperimentRunner",
    "run_experiment",
    "with_seed",
]

"""Runs one configured experiment and emits its results."""

from __future__ import annotations

import logging
import math
import sys
from typing import Callable, Optional, TextIO

from vcausal.errors import VCausalError
from vcausal.kinematics import (
    find_paradox_transition,
    paradox_threshold,
    run_round_trip,
    scan_round_trips,
)
from vcausal.optics import PolarizationAngle, chsh_statistic, malus_scan
from vcausal.orchestration.config import (
    ChshRunSpec,
    ExperimentConfig,
    GhzSignalingSpec,
    KinematicsScanSpec,
    MalusRunSpec,
    RoundTripSpec,
    regimes,
    with_seed,
)
from vcausal.orchestration.output import ExperimentResult, emit, rows_from, scaled
from vcausal.protocol import (
    decision_schedule,
    expected_agreement,
    influence_model,
    reachable,
    signaling_experiment,
)
from vcausal.streams import derive_substream

logger = logging.getLogger(__name__)

ROUND_TRIP_COLUMNS = (
    "regime", "x1", "v", "ubar", "t1", "t1_prime", "x1_prime",
    "return_speed", "delta_t_prime", "total", "paradox",
)
SCAN_COLUMNS = ("v", "t1_prime", "delta_t_prime", "total", "paradox")
SCAN_COLUMNS_BOTH = ("regime",) + SCAN_COLUMNS
MALUS_COLUMNS = ("delta", "expected", "observed", "conditioned_trials", "sigma")
CHSH_COLUMNS = ("a", "b", "correlation", "expected", "trials")
GHZ_COLUMNS = ("block", "decision", "inferred", "correct", "agreements", "trials", "agreement_rate")


class ExperimentRunner:
    """Runs a single experiment to completion."""

    def __init__(self, config: ExperimentConfig, seed: Optional[int] = None):
        # --seed beats the config file
        self._config = config if seed is None else with_seed(config, seed)
        self._seed = self._config.seed

    @property
    def seed(self) -> int:
        return self._seed

    def run(self) -> ExperimentResult:
        """Run the experiment and return its result document."""
        spec = self._config.experiment
        handlers: dict[str, Callable[..., ExperimentResult]] = {
            "round_trip": self._round_trip,
            "kinematics_scan": self._kinematics_scan,
            "malus_run": self._malus_run,
            "chsh_run": self._chsh_run,
            "ghz_signaling": self._ghz_signaling,
        }
        logger.info("running %s with seed %d", spec.name, self._seed)
        return handlers[spec.name](spec.body)

    def _kinematics_factors(self) -> dict[str, float]:
        units = self._config.units
        if units.natural:
            return {}
        speed, time = units.from_beta(1.0), units.to_time(1.0)
        return {
            "v": speed, "ubar": speed, "return_speed": speed,
            "t1": time, "t1_prime": time, "delta_t_prime": time, "total": time,
        }

    def _round_trip(self, spec: RoundTripSpec) -> ExperimentResult:
        reports = [run_round_trip(s) for s in spec.scenarios()]
        factors = self._kinematics_factors()
        return ExperimentResult(
            experiment="round_trip",
            seed=self._seed,
            columns=ROUND_TRIP_COLUMNS,
            rows=[scaled(row, factors) for row in rows_from(reports)],
            summary={
                "paradox_threshold": paradox_threshold(spec.ubar) * self._config.units.from_beta(1.0),
                "c": self._config.units.c,
            },
        )

    def _kinematics_scan(self, spec: KinematicsScanSpec) -> ExperimentResult:
        velocities = spec.velocities()
        chosen = regimes(spec.regime)
        factors = self._kinematics_factors()
        rows = []
        transitions = {}
        for regime in chosen:
            reports = scan_round_trips(spec.x1, spec.ubar, velocities, regime)
            transition = find_paradox_transition(reports)
            transitions[regime.value] = None if transition is None else transition * self._config.units.from_beta(1.0)
            rows.extend(scaled(row, factors) for row in rows_from(reports))
        return ExperimentResult(
            experiment="kinematics_scan",
            seed=self._seed,
            columns=SCAN_COLUMNS_BOTH if len(chosen) > 1 else SCAN_COLUMNS,
            rows=rows,
            summary={
                "paradox_threshold": paradox_threshold(spec.ubar) * self._config.units.from_beta(1.0),
                "first_paradox_v": transitions,
                "c": self._config.units.c,
            },
        )

    def _malus_run(self, spec: MalusRunSpec) -> ExperimentResult:
        points = malus_scan(
            spec.source.to_source(),
            PolarizationAngle.degrees(spec.alpha_deg),
            [math.radians(d) for d in spec.deltas_deg],
            spec.trials,
            derive_substream(self._seed, 0),
        )
        rows = rows_from(points)
        for row, delta_deg in zip(rows, spec.deltas_deg):
            row["delta"] = delta_deg
        measured = [p for p in points if p.conditioned_trials > 0 and p.sigma > 0.0]
        worst = max(
            (abs(p.observed - p.expected) / p.sigma for p in measured),
            default=0.0,
        )
        return ExperimentResult(
            experiment="malus_run",
            seed=self._seed,
            columns=MALUS_COLUMNS,
            rows=rows,
            summary={"source": str(spec.source.to_source()), "max_deviation_sigmas": worst},
        )

    def _chsh_run(self, spec: ChshRunSpec) -> ExperimentResult:
        result = chsh_statistic(
            spec.settings(),
            spec.source.to_source(),
            spec.trials,
            derive_substream(self._seed, 0),
        )
        return ExperimentResult(
            experiment="chsh_run",
            seed=self._seed,
            columns=CHSH_COLUMNS,
            rows=rows_from(result.correlators),
            summary={
                "source": str(spec.source.to_source()),
                "s": result.s,
                "stderr": result.stderr,
                "expected": result.expected,
                "trials": result.trials,
                "violates_local_bound": result.violates_local_bound(),
            },
        )

    def _ghz_signaling(self, spec: GhzSignalingSpec) -> ExperimentResult:
        config = spec.protocol()
        source = spec.ghz_source()
        model = influence_model(spec.model)
        if isinstance(spec.decisions, list):
            decisions = list(spec.decisions)
        else:
            decisions = decision_schedule(spec.decisions, spec.blocks, self._seed)
        result = signaling_experiment(
            config, source, model, decisions, self._seed,
            blocks=spec.blocks, threshold=spec.threshold, workers=spec.workers,
        )
        return ExperimentResult(
            experiment="ghz_signaling",
            seed=self._seed,
            columns=GHZ_COLUMNS,
            rows=rows_from(result.blocks),
            summary={
                "model": model.kind.value,
                "p": source.p,
                "reachable": reachable(config),
                "accuracy": result.accuracy,
                "failure_bound": result.failure_bound,
                "threshold": result.threshold,
                "expected_agreement_measured": expected_agreement(config, source, model, True),
                "expected_agreement_unmeasured": expected_agreement(config, source, model, False),
            },
        )


def run_experiment(
    config: ExperimentConfig,
    *,
    seed: Optional[int] = None,
    fmt: Optional[str] = None,
    out: Optional[str] = None,
    stream: Optional[TextIO] = None,
    errors: Optional[TextIO] = None,
) -> int:
    """Run, then write results; returns the process exit status.

    Flags passed here override the config's output section and seed.
    """
    stream = stream if stream is not None else sys.stdout
    errors = errors if errors is not None else sys.stderr
    try:
        result = ExperimentRunner(config, seed=seed).run()
        emit(
            result,
            fmt or config.output.format,
            out if out is not None else config.output.path,
            stream,
        )
    except VCausalError as exc:
        logger.debug("experiment failed", exc_info=True)
        errors.write(f"error: {exc}\n")
        return exc.exit_code
    return 0

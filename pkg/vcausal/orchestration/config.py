"""Experiment descriptions: JSON schema, parsing and validation.

A config names exactly one experiment under "experiment":

    {"seed": 42,
     "experiment": {"round_trip": {"x1": 1.0, "v": 0.9, "ubar": 2.0, "regime": "sr"}},
     "output": {"format": "json"}}

Unknown fields are rejected. Malformed documents raise ParseError (exit 2);
values that break a module invariant raise ValidationError (exit 3).
"""

from __future__ import annotations

import json
import math
import re
from typing import Annotated, Any, Literal, Optional, Union

import pydantic
from pydantic import BaseModel, ConfigDict, Field, Strict, field_validator, model_validator

from vcausal.errors import ParseError, ValidationError
from vcausal.kinematics import Regime, RoundTripScenario, Units, velocity_grid
from vcausal.optics import OPTIMAL_SETTINGS, PairSource, PolarizationAngle
from vcausal.optics.chsh import MIN_TRIALS
from vcausal.protocol import GHZSource, ProtocolConfig, influence_model
from vcausal.protocol.signaling import DEFAULT_THRESHOLD
from vcausal.streams import MASK64

RegimeChoice = Literal["sr", "preferred", "both"]

# no coercion from strings or booleans; ints are still accepted where a float is expected
Number = Annotated[float, Strict()]
Count = Annotated[int, Strict()]
Flag = Annotated[bool, Strict()]

DEFAULT_DELTAS_DEG = [0.0, 22.5, 45.0, 67.5, 90.0, 112.5, 135.0, 157.5]


def regimes(choice: RegimeChoice) -> list[Regime]:
    if choice == "both":
        return [Regime.SPECIAL_RELATIVITY, Regime.PREFERRED_FRAME]
    return [Regime(choice)]


class _Spec(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class RoundTripSpec(_Spec):
    x1: Number = 1.0
    v: Number
    ubar: Number
    regime: RegimeChoice = "sr"

    @model_validator(mode="after")
    def _check(self) -> "RoundTripSpec":
        self.scenarios()
        return self

    def scenarios(self) -> list[RoundTripScenario]:
        return [
            RoundTripScenario(x1=self.x1, v=self.v, ubar=self.ubar, regime=regime)
            for regime in regimes(self.regime)
        ]


class KinematicsScanSpec(_Spec):
    ubar: Number
    x1: Number = 1.0
    v_start: Number = 0.05
    v_stop: Number = 0.95
    v_step: Number = 0.05
    regime: RegimeChoice = "sr"

    @model_validator(mode="after")
    def _check(self) -> "KinematicsScanSpec":
        grid = self.velocities()
        RoundTripScenario(x1=self.x1, v=grid[0], ubar=self.ubar)
        RoundTripScenario(x1=self.x1, v=grid[-1], ubar=self.ubar)
        return self

    def velocities(self) -> list[float]:
        return velocity_grid(self.v_start, self.v_stop, self.v_step)


class SourceSpec(_Spec):
    kind: Literal["entangled", "mixture"] = "entangled"
    axis_deg: Optional[Number] = None

    @model_validator(mode="after")
    def _check(self) -> "SourceSpec":
        self.to_source()
        return self

    def to_source(self) -> PairSource:
        if self.kind == "entangled":
            if self.axis_deg is not None:
                raise ValueError("an entangled source takes no axis_deg")
            return PairSource.entangled()
        return PairSource.mixture(PolarizationAngle.degrees(self.axis_deg or 0.0))


class MalusRunSpec(_Spec):
    source: SourceSpec = Field(default_factory=SourceSpec)
    alpha_deg: Number = 0.0
    deltas_deg: list[Number] = Field(default_factory=lambda: list(DEFAULT_DELTAS_DEG))
    trials: Count = 100_000

    @field_validator("trials")
    @classmethod
    def _positive(cls, trials: int) -> int:
        if trials < 1:
            raise ValueError(f"trials must be positive, got {trials}")
        return trials

    @field_validator("deltas_deg")
    @classmethod
    def _finite(cls, deltas: list[float]) -> list[float]:
        if not deltas:
            raise ValueError("at least one relative angle is required")
        if not all(math.isfinite(d) for d in deltas):
            raise ValueError("relative angles must be finite")
        return deltas


class ChshRunSpec(_Spec):
    source: SourceSpec = Field(default_factory=SourceSpec)
    settings_deg: list[Number] = Field(
        default_factory=lambda: [math.degrees(float(a)) for a in OPTIMAL_SETTINGS]
    )
    trials: Count = 1_000_000

    @field_validator("settings_deg")
    @classmethod
    def _four(cls, settings: list[float]) -> list[float]:
        if len(settings) != 4:
            raise ValueError(f"CHSH needs four angles (a, a', b, b'), got {len(settings)}")
        return settings

    @field_validator("trials")
    @classmethod
    def _enough(cls, trials: int) -> int:
        if trials < MIN_TRIALS:
            raise ValueError(f"CHSH needs at least {MIN_TRIALS} trials, got {trials}")
        return trials

    def settings(self) -> tuple[PolarizationAngle, ...]:
        return tuple(PolarizationAngle.degrees(a) for a in self.settings_deg)


class GhzSignalingSpec(_Spec):
    l: Number
    t_a: Number = 0.0
    t_l: Number
    ubar: Number
    trials: Count = 1000
    p: Number = 1.0
    model: Literal["finite_speed", "agreement", "local_only"] = "finite_speed"
    blocks: Count = 20
    decisions: Union[Literal["alternating", "random"], list[Flag]] = "alternating"
    threshold: Number = DEFAULT_THRESHOLD
    workers: Count = 1

    @model_validator(mode="after")
    def _check(self) -> "GhzSignalingSpec":
        influence_model(self.model).check_source(self.ghz_source())
        self.protocol()
        if self.blocks < 1:
            raise ValueError(f"blocks must be positive, got {self.blocks}")
        if isinstance(self.decisions, list) and len(self.decisions) != self.blocks:
            raise ValueError(f"expected {self.blocks} decisions, got {len(self.decisions)}")
        if not 0.5 < self.threshold <= 1.0:
            raise ValueError(f"threshold must lie in (0.5, 1], got {self.threshold}")
        if self.workers < 1:
            raise ValueError(f"workers must be positive, got {self.workers}")
        return self

    def protocol(self) -> ProtocolConfig:
        return ProtocolConfig(l=self.l, t_a=self.t_a, t_l=self.t_l, ubar=self.ubar, trials=self.trials)

    def ghz_source(self) -> GHZSource:
        return GHZSource(p=self.p)


EXPERIMENTS = ("round_trip", "kinematics_scan", "malus_run", "chsh_run", "ghz_signaling")


class ExperimentSpec(_Spec):
    """Tagged union: exactly one of the fields is set."""

    round_trip: Optional[RoundTripSpec] = None
    kinematics_scan: Optional[KinematicsScanSpec] = None
    malus_run: Optional[MalusRunSpec] = None
    chsh_run: Optional[ChshRunSpec] = None
    ghz_signaling: Optional[GhzSignalingSpec] = None

    @model_validator(mode="after")
    def _exactly_one(self) -> "ExperimentSpec":
        present = [name for name in EXPERIMENTS if getattr(self, name) is not None]
        if len(present) != 1:
            raise ValueError(
                f"exactly one experiment must be given, got {len(present)}: {', '.join(present) or 'none'}"
            )
        return self

    @property
    def name(self) -> str:
        return next(name for name in EXPERIMENTS if getattr(self, name) is not None)

    @property
    def body(self) -> _Spec:
        return getattr(self, self.name)


class OutputSpec(_Spec):
    format: Literal["csv", "json"] = "json"
    path: Optional[str] = None


class ExperimentConfig(_Spec):
    seed: Count = Field(default=0, ge=0, le=MASK64)
    experiment: ExperimentSpec
    output: OutputSpec = Field(default_factory=OutputSpec)
    c: Optional[Number] = None

    @field_validator("c")
    @classmethod
    def _positive_c(cls, c: Optional[float]) -> Optional[float]:
        if c is not None:
            Units(c)
        return c

    @property
    def units(self) -> Units:
        return Units(self.c if self.c is not None else 1.0)


# pydantic error types that mean "well-formed, but the value is not allowed"
_VALUE_ERRORS = {
    "value_error",
    "assertion_error",
    "greater_than",
    "greater_than_equal",
    "less_than",
    "less_than_equal",
}


def _locate(text: Optional[str], key: Optional[str]) -> Optional[int]:
    if not text or not key:
        return None
    match = re.search(rf'"{re.escape(key)}"\s*:', text)
    if match is None:
        return None
    return text.count("\n", 0, match.start()) + 1


def _translate(exc: pydantic.ValidationError, text: Optional[str]) -> Exception:
    error = exc.errors()[0]
    loc = [str(part) for part in error["loc"]]
    field = ".".join(loc) or None
    if error["type"] in _VALUE_ERRORS:
        original = error.get("ctx", {}).get("error")
        message = str(original) if original is not None else error["msg"]
        return ValidationError(message, field=field)
    key = next((part for part in reversed(loc) if not part.isdigit()), None)
    return ParseError(error["msg"], line=_locate(text, key), field=field)


def config_from_mapping(data: Any, text: Optional[str] = None) -> ExperimentConfig:
    """Validate an already-decoded config document."""
    if not isinstance(data, dict):
        raise ParseError("config must be a JSON object", line=1 if text is not None else None)
    try:
        return ExperimentConfig.model_validate(data)
    except pydantic.ValidationError as exc:
        raise _translate(exc, text) from exc


def parse_config(text: str) -> ExperimentConfig:
    """Parse and validate a UTF-8 JSON experiment description."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc
    return config_from_mapping(data, text)


def with_seed(config: ExperimentConfig, seed: int) -> ExperimentConfig:
    """Copy of config with its seed replaced, validated like a seed read from a file."""
    return config_from_mapping(dict(config.model_dump(), seed=seed))

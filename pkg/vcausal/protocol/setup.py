"""Geometry and source of the three-party experiment.

Alice sits at distance l from the lab where Bob and Charlie work side by side.
All instants are in the privileged frame, with c = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from vcausal.errors import DomainError


@dataclass(frozen=True)
class ProtocolConfig:
    """Alice may measure at t_a; Bob and Charlie measure simultaneously at t_l > t_a."""

    l: float
    t_a: float
    t_l: float
    ubar: float
    trials: int = 1000

    def __post_init__(self) -> None:
        if not (math.isfinite(self.l) and self.l > 0.0):
            raise DomainError(f"distance must satisfy l > 0, got {self.l}")
        if not (math.isfinite(self.t_a) and math.isfinite(self.t_l)):
            raise DomainError("measurement instants must be finite")
        if not self.t_l > self.t_a:
            raise DomainError(f"measurement instants must satisfy t_L > t_A, got t_A={self.t_a}, t_L={self.t_l}")
        if not (math.isfinite(self.ubar) and self.ubar > 1.0):
            raise DomainError(f"influence speed must satisfy ubar > 1, got {self.ubar}")
        if self.trials < 1:
            raise DomainError(f"trials per block must be positive, got {self.trials}")

    @property
    def required_speed(self) -> float:
        """l / (t_L - t_A): the slowest influence that still reaches the lab in time."""
        return self.l / (self.t_l - self.t_a)


def reachable(config: ProtocolConfig) -> bool:
    """ubar > l/(t_L - t_A) > 1.

    The first inequality lets Alice's influence arrive before Bob and Charlie measure;
    the second keeps the measurements space-like separated, so nothing slower could.
    """
    required = config.required_speed
    return config.ubar > required > 1.0


def influence_arrival(config: ProtocolConfig) -> float:
    """Instant at which an influence leaving Alice at t_A reaches the lab."""
    return config.t_a + config.l / config.ubar


@dataclass(frozen=True)
class GHZSource:
    """Emits the GHZ state with probability p, else HHH or VVV with (1 - p)/2 each."""

    p: float = 1.0

    def __post_init__(self) -> None:
        if not (0.0 <= self.p <= 1.0):
            raise DomainError(f"GHZ fraction must satisfy 0 <= p <= 1, got {self.p}")

    @property
    def is_pure(self) -> bool:
        return self.p == 1.0

    @property
    def is_mixture(self) -> bool:
        return self.p == 0.0

"""Detour geometry that puts the two detections in a fixed time order."""

from __future__ import annotations

import math
from dataclasses import dataclass

from vcausal.errors import DomainError
from vcausal.kinematics import Event, Frame, is_timelike, order_is_invariant


@dataclass(frozen=True)
class DetourGeometry:
    """Source at the origin, detectors at -arm (nu1) and +arm (nu2).

    nu2 runs an extra detour before its polarizer, so it is detected at t = arm + detour
    while nu1 is detected at t = arm. The detections are time-like separated, and nu1
    is first in every frame, exactly when detour > 2 * arm.
    """

    arm: float
    detour: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.arm) and self.arm > 0.0):
            raise DomainError(f"arm length must be positive, got {self.arm}")
        if not (math.isfinite(self.detour) and self.detour >= 0.0):
            raise DomainError(f"detour must be non-negative, got {self.detour}")

    def detection_events(self) -> tuple[Event, Event]:
        return (
            Event(-self.arm, self.arm, Frame.S),
            Event(self.arm, self.arm + self.detour, Frame.S),
        )

    def is_time_ordered(self) -> bool:
        """True when nu1's detection precedes nu2's in all inertial frames."""
        first, second = self.detection_events()
        return is_timelike(first, second) and order_is_invariant(first, second)

    @classmethod
    def minimal(cls, arm: float, margin: float = 1e-6) -> "DetourGeometry":
        return cls(arm=arm, detour=2.0 * arm + margin)

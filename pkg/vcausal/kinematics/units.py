"""Conversion between natural units (c = 1) and SI input/output."""

from __future__ import annotations

import math
from dataclasses import dataclass

from vcausal.errors import DomainError

SPEED_OF_LIGHT = 299_792_458.0  # m/s


@dataclass(frozen=True)
class Units:
    """Scale for speeds and times at the CLI boundary.

    With c = 1 every conversion is the identity. Otherwise speeds are in m/s,
    lengths in m and times in s; internally t is stored as c*t.
    """

    c: float = 1.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.c) and self.c > 0.0):
            raise DomainError(f"speed of light must be positive, got {self.c}")

    @property
    def natural(self) -> bool:
        return self.c == 1.0

    def to_beta(self, speed: float) -> float:
        return speed / self.c

    def from_beta(self, beta: float) -> float:
        return beta * self.c

    def to_time(self, natural_time: float) -> float:
        return natural_time / self.c

    def from_time(self, seconds: float) -> float:
        return seconds * self.c

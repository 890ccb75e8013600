"""Polarization angles, analyzer outcomes and photon-pair sources."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from vcausal.errors import DomainError


@dataclass(frozen=True)
class PolarizationAngle:
    """A polarization direction in radians, canonical in [0, pi).

    theta and theta + pi are the same direction.
    """

    theta: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.theta):
            raise DomainError(f"Polarization angle must be finite, got {self.theta}")
        object.__setattr__(self, "theta", canonical_angle(self.theta))

    @classmethod
    def degrees(cls, value: float) -> "PolarizationAngle":
        return cls(math.radians(value))

    @property
    def perpendicular(self) -> "PolarizationAngle":
        return PolarizationAngle(self.theta + math.pi / 2)

    def rotated(self, delta: float) -> "PolarizationAngle":
        return PolarizationAngle(self.theta + delta)

    def __float__(self) -> float:
        return self.theta

    def __str__(self) -> str:
        return f"{math.degrees(self.theta):g}deg"


def canonical_angle(theta: float) -> float:
    """Reduce an angle mod pi into [0, pi); a result equal to pi wraps to 0."""
    reduced = theta % math.pi
    if reduced >= math.pi:
        # -tiny % pi rounds up to pi
        return 0.0
    return reduced


class Outcome(str, Enum):
    """Exit channel of a two-channel polarizer."""

    TRANSMITTED = "T"  # parallel to the analyzer axis
    REFLECTED = "R"  # perpendicular


class Photon(str, Enum):
    NU1 = "nu1"
    NU2 = "nu2"


class SourceKind(str, Enum):
    ENTANGLED = "entangled"
    MIXTURE = "mixture"


@dataclass(frozen=True)
class PairSource:
    """A photon-pair source.

    ENTANGLED emits the rotationally symmetric polarization-entangled pair.
    MIXTURE emits, with probability 1/2 each, both photons along axis or both
    along axis + pi/2; the pair has a definite (hidden) polarization.
    """

    kind: SourceKind
    axis: Optional[PolarizationAngle] = None

    def __post_init__(self) -> None:
        if self.kind is SourceKind.MIXTURE and self.axis is None:
            raise DomainError("A mixture source needs an axis")
        if self.kind is SourceKind.ENTANGLED and self.axis is not None:
            raise DomainError("An entangled source has no privileged axis")

    @classmethod
    def entangled(cls) -> "PairSource":
        return cls(SourceKind.ENTANGLED)

    @classmethod
    def mixture(cls, axis: PolarizationAngle | float = 0.0) -> "PairSource":
        if not isinstance(axis, PolarizationAngle):
            axis = PolarizationAngle(axis)
        return cls(SourceKind.MIXTURE, axis)

    @property
    def is_entangled(self) -> bool:
        return self.kind is SourceKind.ENTANGLED

    def __str__(self) -> str:
        if self.is_entangled:
            return "entangled"
        return f"mixture(axis={self.axis})"

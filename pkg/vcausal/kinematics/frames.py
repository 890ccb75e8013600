"""Events, frames and Lorentz transformations in 1+1 dimensions.

Natural units throughout: c = 1, so every speed is a dimensionless multiple of c
and times are measured in the same unit as lengths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

from vcausal.errors import CompositionSingularity, DomainError, FrameMismatch

TOLERANCE = 1e-12


class Frame(str, Enum):
    """The two inertial frames in standard configuration."""

    S = "S"  # privileged frame
    S_PRIME = "S'"  # moves with speed v along +x


@dataclass(frozen=True)
class Velocity:
    """A speed as a multiple of c.

    Frame velocities satisfy |beta| < 1; superluminal signal speeds satisfy beta > 1.
    Light itself is beta = 1.
    """

    beta: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.beta):
            raise DomainError(f"Velocity must be finite, got {self.beta}")

    def __float__(self) -> float:
        return self.beta

    @property
    def is_subluminal(self) -> bool:
        return abs(self.beta) < 1.0

    @property
    def is_superluminal(self) -> bool:
        return self.beta > 1.0

    @classmethod
    def frame(cls, beta: float) -> "Velocity":
        """Velocity of an inertial frame; rejects |beta| >= 1."""
        return cls(_frame_speed(beta))

    @classmethod
    def signal(cls, beta: float) -> "Velocity":
        """Speed of a superluminal signal; rejects beta <= 1."""
        return cls(_signal_speed(beta))


Speed = Union[float, Velocity]


@dataclass(frozen=True)
class Event:
    """A spacetime point (x, t) labelled with the frame it is expressed in."""

    x: float
    t: float
    frame: Frame = Frame.S

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.t)):
            raise DomainError(f"Event coordinates must be finite, got ({self.x}, {self.t})")

    def __str__(self) -> str:
        return f"({self.x}, {self.t}) in {self.frame.value}"


def _frame_speed(v: Speed) -> float:
    beta = float(v)
    if not abs(beta) < 1.0:
        raise DomainError(f"frame speed must satisfy |v| < 1, got {beta}")
    return beta


def _signal_speed(ubar: Speed) -> float:
    beta = float(ubar)
    if not (math.isfinite(beta) and beta > 1.0):
        raise DomainError(f"signal speed must satisfy ubar > 1, got {beta}")
    return beta


def gamma(v: Speed) -> float:
    """Lorentz factor 1/sqrt(1 - v^2)."""
    beta = _frame_speed(v)
    return 1.0 / math.sqrt(1.0 - beta * beta)


def boost_to_prime(event: Event, v: Speed) -> Event:
    """Express an S event in S': x' = g(x - vt), t' = g(t - vx)."""
    beta = _frame_speed(v)
    if event.frame is not Frame.S:
        raise FrameMismatch(f"boost_to_prime expects an event in S, got {event}")
    g = gamma(beta)
    return Event(
        x=g * (event.x - beta * event.t),
        t=g * (event.t - beta * event.x),
        frame=Frame.S_PRIME,
    )


def boost_from_prime(event: Event, v: Speed) -> Event:
    """Express an S' event in S: x = g(x' + vt'), t = g(t' + vx')."""
    beta = _frame_speed(v)
    if event.frame is not Frame.S_PRIME:
        raise FrameMismatch(f"boost_from_prime expects an event in S', got {event}")
    g = gamma(beta)
    return Event(
        x=g * (event.x + beta * event.t),
        t=g * (event.t + beta * event.x),
        frame=Frame.S,
    )


def compose_velocity_to_prime(u: float, v: Speed) -> float:
    """Speed in S' of an object moving at u in S: (u - v)/(1 - vu)."""
    beta = _frame_speed(v)
    u = float(u)
    denominator = 1.0 - beta * u
    if abs(denominator) < TOLERANCE:
        raise CompositionSingularity(
            f"1 - v*u vanishes for u={u}, v={beta}: the speed in S' diverges"
        )
    return (u - beta) / denominator


def compose_velocity_from_prime(u_prime: float, v: Speed) -> float:
    """Speed in S of an object moving at u' in S': (u' + v)/(1 + vu')."""
    beta = _frame_speed(v)
    u_prime = float(u_prime)
    denominator = 1.0 + beta * u_prime
    if abs(denominator) < TOLERANCE:
        raise CompositionSingularity(
            f"1 + v*u' vanishes for u'={u_prime}, v={beta}: the speed in S diverges"
        )
    return (u_prime + beta) / denominator


def interval_squared(first: Event, second: Event) -> float:
    """Invariant interval (dt)^2 - (dx)^2 between two events of one frame."""
    if first.frame is not second.frame:
        raise FrameMismatch(f"Events live in different frames: {first} and {second}")
    dt = second.t - first.t
    dx = second.x - first.x
    return dt * dt - dx * dx


def is_timelike(first: Event, second: Event) -> bool:
    return interval_squared(first, second) > 0.0


def order_is_invariant(first: Event, second: Event) -> bool:
    """True when no boost with |v| < 1 can reverse the time order of the two events.

    Holds for time-like and light-like separations; simultaneous coincident events count too.
    """
    return interval_squared(first, second) >= 0.0

"""Superluminal round trips and causal paradox detection.

A signal leaves the common origin at t = t' = 0 with speed ubar in the privileged
frame S and reaches x1. An observer of the moving frame S' sitting at x1' when it
arrives answers with a return signal toward the origin of S'. The loop is a
paradox when the answer arrives before the first signal was sent (total < 0).

Under special relativity the return signal travels at -ubar in S' (the frames are
equivalent). In the preferred-frame model ubar is fixed in S, so the return
speed in S' is the composed -ubar instead.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence

from vcausal.errors import DomainError
from vcausal.kinematics.frames import (
    Event,
    Frame,
    Speed,
    _frame_speed,
    _signal_speed,
    boost_to_prime,
    compose_velocity_from_prime,
    compose_velocity_to_prime,
    gamma,
)

logger = logging.getLogger(__name__)

MAX_GRID_POINTS = 1_000_000


class Regime(str, Enum):
    """How the return signal's speed is fixed."""

    SPECIAL_RELATIVITY = "sr"
    PREFERRED_FRAME = "preferred"


@dataclass(frozen=True)
class RoundTripScenario:
    """Inputs of one round trip: target x1 > 0, frame speed 0 < v < 1, signal speed ubar > 1."""

    x1: float
    v: float
    ubar: float
    regime: Regime = Regime.SPECIAL_RELATIVITY

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x1) and self.x1 > 0.0):
            raise DomainError(f"target position must satisfy x1 > 0, got {self.x1}")
        _frame_speed(self.v)
        if not self.v > 0.0:
            raise DomainError(f"frame speed must satisfy 0 < v < 1, got {self.v}")
        _signal_speed(self.ubar)


@dataclass(frozen=True)
class ParadoxReport:
    """Derivation trace of a round trip.

    t1 is the arrival time in S; t1_prime and x1_prime locate the arrival in S';
    return_speed is the S' speed of the answer and delta_t_prime its travel time.
    total is t1_prime + delta_t_prime, evaluated in factored form (see _loop_total).
    """

    scenario: RoundTripScenario
    t1: float
    t1_prime: float
    x1_prime: float
    return_speed: float
    delta_t_prime: float
    total: float

    @property
    def paradox(self) -> bool:
        # strict: total == 0 is the critical case, not a paradox
        return self.total < 0.0

    def as_row(self) -> dict[str, object]:
        return {
            "regime": self.scenario.regime.value,
            "x1": self.scenario.x1,
            "v": self.scenario.v,
            "ubar": self.scenario.ubar,
            "t1": self.t1,
            "t1_prime": self.t1_prime,
            "x1_prime": self.x1_prime,
            "return_speed": self.return_speed,
            "delta_t_prime": self.delta_t_prime,
            "total": self.total,
            "paradox": self.paradox,
        }


def signal_arrival_time(x1: float, ubar: Speed) -> float:
    """Time in S at which a signal sent from the origin at t = 0 reaches x1."""
    if not (math.isfinite(x1) and x1 > 0.0):
        raise DomainError(f"target position must satisfy x1 > 0, got {x1}")
    return x1 / _signal_speed(ubar)


def _loop_total(scenario: RoundTripScenario) -> float:
    """t1' + dt' without the cancellation of the summed form.

    Special relativity: g*x1/u * (2 - v*(u + 1/u)), exactly zero at the threshold speed.
    Preferred frame: 2*x1 / (g*(u + v)), positive for every admissible scenario.
    """
    x1, v, u = scenario.x1, scenario.v, scenario.ubar
    g = gamma(v)
    if scenario.regime is Regime.SPECIAL_RELATIVITY:
        return g * x1 / u * (2.0 - v * (u + 1.0 / u))
    return 2.0 * x1 / (g * (u + v))


def run_round_trip(scenario: RoundTripScenario) -> ParadoxReport:
    """Build the round trip for one scenario and report whether it closes into a paradox."""
    t1 = signal_arrival_time(scenario.x1, scenario.ubar)
    arrival = boost_to_prime(Event(scenario.x1, t1, Frame.S), scenario.v)

    if scenario.regime is Regime.SPECIAL_RELATIVITY:
        return_speed = -scenario.ubar
    else:
        return_speed = compose_velocity_to_prime(-scenario.ubar, scenario.v)

    report = ParadoxReport(
        scenario=scenario,
        t1=t1,
        t1_prime=arrival.t,
        x1_prime=arrival.x,
        return_speed=return_speed,
        delta_t_prime=arrival.x / -return_speed,
        total=_loop_total(scenario),
    )
    logger.debug(
        "round trip %s v=%s ubar=%s: total=%s paradox=%s",
        scenario.regime.value, scenario.v, scenario.ubar, report.total, report.paradox,
    )
    return report


def paradox_threshold(ubar: Speed) -> float:
    """Frame speed 2u/(1 + u^2) above which the special-relativistic loop is a paradox."""
    u = _signal_speed(ubar)
    # 2/(u + 1/u) keeps the ratio finite for very large u
    return 2.0 / (u + 1.0 / u)


def reversal_threshold(ubar: Speed) -> float:
    """Frame speed 1/u above which the outbound signal runs backwards in time in S'."""
    return 1.0 / _signal_speed(ubar)


def apparent_speeds(ubar: Speed, v: Speed) -> tuple[float, float]:
    """S' speeds of signals moving at +ubar and -ubar in the privileged frame.

    In the preferred-frame model these differ, which is what lets an observer in S'
    detect their own motion.
    """
    u = _signal_speed(ubar)
    return compose_velocity_to_prime(u, v), compose_velocity_to_prime(-u, v)


def infer_frame_velocity(forward: float, backward: float) -> tuple[float, float]:
    """Recover (v, ubar) from the two speeds measured in the moving frame.

    Both speeds must map to +ubar and -ubar in S, which leaves the quadratic
    s*v^2 + 2q*v + s = 0 with s = forward + backward and q = 1 + forward*backward.
    Its roots multiply to 1, so at most one lies inside |v| < 1.
    """
    s = forward + backward
    q = 1.0 + forward * backward
    if s == 0.0:
        v = 0.0
    else:
        discriminant = q * q - s * s
        if discriminant < 0.0 or q == 0.0:
            raise DomainError(
                f"speeds {forward} and {backward} are not a +/-ubar pair seen from any frame"
            )
        v = -s / (q + math.copysign(math.sqrt(discriminant), q))
    _frame_speed(v)
    ubar = compose_velocity_from_prime(forward, v)
    _signal_speed(ubar)
    return v, ubar


def scan_round_trips(
    x1: float,
    ubar: float,
    velocities: Iterable[float],
    regime: Regime = Regime.SPECIAL_RELATIVITY,
) -> list[ParadoxReport]:
    """Run one scenario per frame speed, in the order given."""
    reports = [run_round_trip(RoundTripScenario(x1=x1, v=v, ubar=ubar, regime=regime)) for v in velocities]
    logger.info("scanned %d frame speeds at ubar=%s (%s)", len(reports), ubar, regime.value)
    return reports


def find_paradox_transition(reports: Sequence[ParadoxReport]) -> Optional[float]:
    """Frame speed of the first report flagged as a paradox, or None."""
    for report in reports:
        if report.paradox:
            return report.scenario.v
    return None


def velocity_grid(start: float, stop: float, step: float) -> list[float]:
    """Inclusive grid start, start + step, ... <= stop, built by index to avoid drift."""
    if not step > 0.0:
        raise DomainError(f"grid step must be positive, got {step}")
    if stop < start:
        raise DomainError(f"grid stop {stop} lies below start {start}")
    span = (stop - start) / step
    if not math.isfinite(span) or span >= MAX_GRID_POINTS:
        raise DomainError(
            f"grid of step {step} over [{start}, {stop}] exceeds {MAX_GRID_POINTS} points"
        )
    count = int(math.floor(span + 1e-9)) + 1
    return [round(start + i * step, 12) for i in range(count)]

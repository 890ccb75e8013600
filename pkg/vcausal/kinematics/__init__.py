"""Lorentz kinematics and the superluminal round-trip paradox."""

from vcausal.kinematics.frames import (
    Event,
    Frame,
    Velocity,
    boost_from_prime,
    boost_to_prime,
    compose_velocity_from_prime,
    compose_velocity_to_prime,
    gamma,
    interval_squared,
    is_timelike,
    order_is_invariant,
)
from vcausal.kinematics.round_trip import (
    MAX_GRID_POINTS,
    ParadoxReport,
    Regime,
    RoundTripScenario,
    apparent_speeds,
    find_paradox_transition,
    infer_frame_velocity,
    paradox_threshold,
    reversal_threshold,
    run_round_trip,
    scan_round_trips,
    signal_arrival_time,
    velocity_grid,
)
from vcausal.kinematics.units import SPEED_OF_LIGHT, Units

__all__ = [
    "Event",
    "Frame",
    "Velocity",
    "boost_from_prime",
    "boost_to_prime",
    "compose_velocity_from_prime",
    "compose_velocity_to_prime",
    "gamma",
    "interval_squared",
    "is_timelike",
    "order_is_invariant",
    "MAX_GRID_POINTS",
    "ParadoxReport",
    "Regime",
    "RoundTripScenario",
    "apparent_speeds",
    "find_paradox_transition",
    "infer_frame_velocity",
    "paradox_threshold",
    "reversal_threshold",
    "run_round_trip",
    "scan_round_trips",
    "signal_arrival_time",
    "velocity_grid",
    "SPEED_OF_LIGHT",
    "Units",
]

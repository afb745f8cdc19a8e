"""Low-level layer: rate-limited setpoint, PI tracking and saturation.

The planner's target is never fed to the actuator directly. The setpoint
``v_pid`` chases it at most as fast as the limit model allows, and the PI
loop then tracks the setpoint with a command clipped by the same bounds.
While the setpoint is rate limited the gap keeps opening (or closing),
and the planner's later correction of that gap is what overshoots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import LimitModel, VehicleState, accel_bound, decel_bound

ACTUATION_MODES = ("pi", "ideal")


@dataclass(frozen=True)
class PiGains:
    kp: float = 0.9
    ki: float = 0.1
    i_cap: float = 5.0

    def __post_init__(self):
        if not self.kp > 0:
            raise ValueError("kp: must be > 0")
        if not self.ki >= 0:
            raise ValueError("ki: must be >= 0")
        if not self.i_cap > 0:
            raise ValueError("i_cap: must be > 0")


def advance_setpoint(v_pid: float, v_target: float, v_ego: float,
                     lim: LimitModel | None, dt: float) -> float:
    """Move the setpoint toward ``v_target`` within the rate window at ``v_ego``."""
    lo = v_pid + decel_bound(v_ego, lim) * dt
    hi = v_pid + accel_bound(v_ego, lim) * dt
    return max(0.0, min(hi, max(lo, v_target)))


def pi_step(state: VehicleState, v_pid: float, gains: PiGains,
            lim: LimitModel | None, dt: float) -> tuple[float, float]:
    """One PI update; returns ``(a_cmd, i_term)``.

    The command uses the integral accumulated so far and is clipped to the
    limit model at the current speed. The integral is clamped to ``i_cap``.
    """
    err = v_pid - state.v
    a_cmd = gains.kp * err + gains.ki * state.i_term
    a_cmd = min(accel_bound(state.v, lim), max(decel_bound(state.v, lim), a_cmd))
    i_term = min(gains.i_cap, max(-gains.i_cap, state.i_term + err * dt))
    return a_cmd, i_term


def max_accel_speed(v0: float, lim: LimitModel, t: float) -> float:
    """Speed after accelerating at the bound for ``t`` seconds from ``v0``.

    Closed form of ``dv/dt = a0 + (v_c - v) * beta``, written as
    ``v0 + a(v0) * (1 - exp(-beta t)) / beta`` so that it stays accurate
    as ``beta`` goes to 0 (where it becomes ``v0 + a0 * t``). Accepts an
    array of times.
    """
    if np.any(np.asarray(t) < 0):
        raise ValueError("t: must be >= 0")
    a_start = accel_bound(v0, lim)
    if lim.beta == 0:
        return v0 + a_start * t
    return v0 + a_start * -np.expm1(-lim.beta * t) / lim.beta


def max_accel_distance(v0: float, lim: LimitModel, t: float) -> float:
    """Distance covered over ``[0, t]`` on the :func:`max_accel_speed` trajectory."""
    a_start = accel_bound(v0, lim)
    bt = lim.beta * t
    if bt < 1e-3:
        # series of (t - (1 - exp(-beta t)) / beta) / beta, avoids cancellation
        shape = t * t * (0.5 - bt / 6.0 + bt * bt / 24.0)
    else:
        shape = (t + math.expm1(-bt) / lim.beta) / lim.beta
    return v0 * t + a_start * shape

"""Deterministic discrete-time platoon engine.

Vehicle 0 is the leader and follows its :class:`LeadProfile`. Within a
tick the leader moves first, then each follower front to back: its
position advances with its old speed, it senses the gap and lead speed of
the same tick, and runs planner -> setpoint -> PI (or ideal actuation)
to get its new speed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..actuation import ACTUATION_MODES, PiGains, advance_setpoint, pi_step
from ..core import AccParams, LeadProfile, LimitModel, VehicleState, equilibrium_spacing
from ..planner import PlannerInput, target_speed
from .profiles import generate_lead


class ScenarioError(ValueError):
    """Invalid scenario; the message starts with the offending field."""


@dataclass(frozen=True)
class VehicleConfig:
    params: AccParams = field(default_factory=AccParams)
    limits: LimitModel | None = field(default_factory=LimitModel)
    pi: PiGains = field(default_factory=PiGains)
    actuation: str = "pi"
    v_init: float | None = None
    gap_init: float | None = None


@dataclass(frozen=True)
class Scenario:
    followers: tuple[VehicleConfig, ...]
    lead: LeadProfile
    dt: float = 0.1
    horizon: float = 60.0
    v_eq: float | None = None
    rng_seed: int = 0
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "followers", tuple(self.followers))
        if not self.dt > 0:
            raise ScenarioError("dt: must be > 0")
        if not self.horizon >= self.dt:
            raise ScenarioError("horizon: must be >= dt")
        if len(self.followers) < 1:
            raise ScenarioError("n_vehicles: must be >= 2")
        if self.v_eq is not None and self.v_eq < 0:
            raise ScenarioError("v_eq: must be >= 0")
        for i, cfg in enumerate(self.followers, start=1):
            if cfg.actuation not in ACTUATION_MODES:
                raise ScenarioError(f"vehicles[{i}].actuation: must be one of {ACTUATION_MODES}")
            if cfg.v_init is not None and cfg.v_init < 0:
                raise ScenarioError(f"vehicles[{i}].v_init: must be >= 0")

    @property
    def n_vehicles(self) -> int:
        return len(self.followers) + 1

    @property
    def n_ticks(self) -> int:
        return max(1, int(round(self.horizon / self.dt)))

    @property
    def equilibrium_speed(self) -> float:
        return self.lead.v0 if self.v_eq is None else self.v_eq


@dataclass(frozen=True)
class CrashEvent:
    t: float
    vehicle: int


@dataclass(frozen=True)
class PlatoonState:
    vehicles: tuple[VehicleState, ...]
    v_target: tuple[float, ...]
    # spacing frozen at the crash tick, per vehicle; None while intact
    crashed: tuple[float | None, ...]


@dataclass
class TrajectoryLog:
    """Per-tick, per-vehicle signals; arrays are ``(n_ticks, n_vehicles)``.

    Row ``k`` holds the state at ``t[k]`` together with the setpoint, target
    and realized acceleration that produced it. Leader spacing is NaN.
    """

    t: np.ndarray
    x: np.ndarray
    v: np.ndarray
    a: np.ndarray
    v_target: np.ndarray
    v_pid: np.ndarray
    spacing: np.ndarray
    crashes: list[CrashEvent] = field(default_factory=list)

    @property
    def n_ticks(self) -> int:
        return len(self.t)

    @property
    def n_vehicles(self) -> int:
        return self.x.shape[1]


def initial_state(scenario: Scenario) -> PlatoonState:
    """Equilibrium at ``v_eq`` unless a follower overrides speed or gap."""
    v_lead, a_lead = generate_lead(scenario.lead, 0.0)
    vehicles = [VehicleState(x=0.0, v=v_lead, a=a_lead, v_pid=v_lead)]
    targets = [v_lead]
    v_eq = scenario.equilibrium_speed
    prev_x, prev_v = 0.0, v_lead
    for cfg in scenario.followers:
        v = v_eq if cfg.v_init is None else cfg.v_init
        gap = equilibrium_spacing(prev_v, cfg.params) if cfg.gap_init is None else cfg.gap_init
        x = prev_x - gap
        vehicles.append(VehicleState(x=x, v=v, a=0.0, v_pid=v))
        targets.append(v)
        prev_x, prev_v = x, v
    return PlatoonState(tuple(vehicles), tuple(targets), (None,) * len(vehicles))


def _follower_step(ego: VehicleState, lead: VehicleState, cfg: VehicleConfig,
                   dt: float) -> tuple[VehicleState, float]:
    """Advance one follower given its predecessor's state at the new tick."""
    x = ego.x + ego.v * dt
    v_target = target_speed(PlannerInput(lead.x - x, lead.v, ego.v), cfg.params)
    v_pid = advance_setpoint(ego.v_pid, v_target, ego.v, cfg.limits, dt)
    if cfg.actuation == "ideal":
        v_new, i_term = v_pid, 0.0
    else:
        a_cmd, i_term = pi_step(ego, v_pid, cfg.pi, cfg.limits, dt)
        v_new = max(0.0, ego.v + a_cmd * dt)
    a = (v_new - ego.v) / dt
    return VehicleState(x=x, v=v_new, a=a, v_pid=v_pid, i_term=i_term), v_target


def step(state: PlatoonState, scenario: Scenario, t: float,
         crash_log: list[CrashEvent] | None = None) -> PlatoonState:
    """Advance the platoon from ``t`` to ``t + dt``."""
    dt = scenario.dt
    old = state.vehicles
    v_lead, a_lead = generate_lead(scenario.lead, t + dt)
    lead = old[0]
    new = [VehicleState(x=lead.x + lead.v * dt, v=v_lead, a=a_lead, v_pid=v_lead)]
    targets = [v_lead]
    crashed = list(state.crashed)
    for i, cfg in enumerate(scenario.followers, start=1):
        if crashed[i] is not None:
            front = new[i - 1]
            new.append(VehicleState(x=front.x - crashed[i], v=front.v, a=front.a, v_pid=front.v))
            targets.append(front.v)
            continue
        ego, v_target = _follower_step(old[i], new[i - 1], cfg, dt)
        gap = new[i - 1].x - ego.x
        if gap <= 0.0:
            crashed[i] = gap
            if crash_log is not None:
                crash_log.append(CrashEvent(t + dt, i))
        new.append(ego)
        targets.append(v_target)
    return PlatoonState(tuple(new), tuple(targets), tuple(crashed))


def run(scenario: Scenario) -> TrajectoryLog:
    """Execute ``scenario`` over its horizon.

    Bitwise deterministic: the engine draws no random numbers (mixed
    platoons are sampled when the scenario is built).
    """
    n, m = scenario.n_ticks, scenario.n_vehicles
    cols = {name: np.empty((n, m)) for name in ("x", "v", "a", "v_target", "v_pid")}
    t_arr = np.arange(n) * scenario.dt
    crashes: list[CrashEvent] = []
    state = initial_state(scenario)
    for k in range(n):
        for j, veh in enumerate(state.vehicles):
            cols["x"][k, j] = veh.x
            cols["v"][k, j] = veh.v
            cols["a"][k, j] = veh.a
            cols["v_pid"][k, j] = veh.v_pid
            cols["v_target"][k, j] = state.v_target[j]
        if k + 1 < n:
            state = step(state, scenario, t_arr[k], crashes)
    spacing = np.full((n, m), math.nan)
    spacing[:, 1:] = cols["x"][:, :-1] - cols["x"][:, 1:]
    return TrajectoryLog(t=t_arr, spacing=spacing, crashes=crashes, **cols)

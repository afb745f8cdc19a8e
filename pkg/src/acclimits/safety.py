"""Collision-avoidance gain bound and trajectory safety metrics.

Braking hard enough requires the planner gain to be large,

    k >= a_required / (v_lead - v_ego - tau * a_lead),

while string stability caps it at ``2 / tau``. The bound only bites while
the denominator is negative, i.e. the follower closes in faster than
``tau`` times the leader's deceleration.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import AccParams
from .sim.engine import TrajectoryLog

TTC_EPS = 1e-6


@dataclass(frozen=True)
class GainInterval:
    k_min: float
    k_max: float
    feasible: bool


@dataclass(frozen=True)
class SafetyReport:
    k_min: float | None
    k_max: float | None
    feasible: bool | None
    min_spacing: float
    min_ttc: float
    crash: bool
    takeover_speed: float | None

    def to_dict(self) -> dict:
        return {
            "k_min": self.k_min,
            "k_max": self.k_max,
            "feasible": self.feasible,
            "min_spacing": self.min_spacing,
            "min_ttc": self.min_ttc,
            "crash": self.crash,
            "takeover_speed": self.takeover_speed,
        }


def required_gain(v_lead: float, v_ego: float, a_lead: float, tau: float,
                  a_required: float) -> float | None:
    """Smallest gain that commands ``a_required``; None when the bound is vacuous."""
    if a_required >= 0:
        raise ValueError("a_required: must be < 0")
    denom = v_lead - v_ego - tau * a_lead
    if denom >= 0:
        return None
    return a_required / denom


def required_deceleration(v_ego: float, v_lead: float, s: float, delta: float) -> float:
    """Constant deceleration that sheds the speed difference within ``s - delta``."""
    return -(v_ego * v_ego - v_lead * v_lead) / (2.0 * max(s - delta, TTC_EPS))


def gain_feasibility(k_min: float | None, tau: float) -> GainInterval:
    """Intersect the safety lower bound with the string-stability cap ``2 / tau``."""
    k_lo = 0.0 if k_min is None else k_min
    if k_lo < 0:
        raise ValueError("k_min: must be >= 0")
    k_max = 2.0 / tau
    return GainInterval(float(k_lo), k_max, bool(k_lo <= k_max))


def time_to_collision(spacing, closing_speed):
    """``spacing / max(closing_speed, eps)``, floored at 0 once the gap is gone."""
    return np.maximum(spacing, 0.0) / np.maximum(closing_speed, TTC_EPS)


def trajectory_safety(log: TrajectoryLog, delta: float) -> SafetyReport:
    """Minimum spacing and TTC over all follower pairs of a run.

    ``takeover_speed`` is the follower speed at the first tick where a gap
    drops below ``delta``; a driver would have to intervene there.
    """
    if log.n_ticks == 0:
        raise ValueError("log: empty")
    s = log.spacing[:, 1:]
    closing = log.v[:, 1:] - log.v[:, :-1]
    ttc = time_to_collision(s, closing)
    takeover = None
    below = np.argwhere(s < delta)
    if below.size:
        tick, j = below[0]  # argwhere is row-major: earliest tick first
        takeover = float(log.v[tick, j + 1])
    return SafetyReport(
        k_min=None,
        k_max=None,
        feasible=None,
        min_spacing=float(s.min()),
        min_ttc=float(ttc.min()),
        crash=bool(len(log.crashes)) or bool((s <= 0).any()),
        takeover_speed=takeover,
    )


def scan_required_gain(log: TrajectoryLog, params: list[AccParams]) -> float | None:
    """Gain bound at the first tick it bites, maxed over followers.

    ``params[j]`` belongs to follower ``j + 1``. A tick counts once the
    follower is faster than its leader, still outside ``delta`` and the
    bound is not vacuous; that is when a planner would first have to act.
    Later ticks are skipped because the bound diverges as the denominator
    approaches zero or the gap approaches ``delta``.
    """
    worst = None
    for j, p in enumerate(params, start=1):
        for tick in range(log.n_ticks):
            v_ego, v_lead = log.v[tick, j], log.v[tick, j - 1]
            s = log.spacing[tick, j]
            if v_ego <= v_lead or s <= p.delta:
                continue
            a_req = required_deceleration(v_ego, v_lead, s, p.delta)
            k = required_gain(v_lead, v_ego, log.a[tick, j - 1], p.tau, a_req)
            if k is None:
                continue
            if worst is None or k > worst:
                worst = float(k)
            break
    return worst


def safety_report(log: TrajectoryLog, params: list[AccParams]) -> SafetyReport:
    """Trajectory metrics plus the gain interval against the tightest SS cap."""
    traj = trajectory_safety(log, min(p.delta for p in params))
    k_min = scan_required_gain(log, params)
    tau = max(p.tau for p in params)
    interval = gain_feasibility(k_min, tau)
    return SafetyReport(
        k_min=k_min,
        k_max=interval.k_max,
        feasible=interval.feasible,
        min_spacing=traj.min_spacing,
        min_ttc=traj.min_ttc,
        crash=traj.crash,
        takeover_speed=traj.takeover_speed,
    )


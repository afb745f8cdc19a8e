"""Closed-form estimate of the overshoot caused by the acceleration limit.

A step-like lead speed increase from ``v0`` to ``v_plateau`` leaves the
follower on its maximum-acceleration trajectory until it matches the
lead speed at ``T1``. The gap opened meanwhile is then closed by pushing
the setpoint above the plateau until it meets the falling planner target.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .actuation import max_accel_distance
from .core import AccParams, LeadProfile, LimitModel, accel_bound, equilibrium_spacing
from .planner import gain_at
from .sim.profiles import generate_lead, lead_distance, lead_distance_quad

# Variants of the gap-closing quadratic
#   (k a / 2) dT^2 + b dT - k * excess = 0
# "relative":  b = a                  (target falls at k * (v_ego - v_lead))
# "full":      b = a + k * v_plateau  (target falls at k * v_ego)
# "truncated": b = k * v_plateau      (as "full" with the a * dT term dropped)
# Only "relative" tracks simulation; the other two underestimate the peak.
VARIANTS = ("full", "truncated", "relative")


class NoSolutionError(ValueError):
    """The requested quantity does not exist for these inputs."""


@dataclass(frozen=True)
class OvershootSolution:
    t1: float
    s_t1: float
    dT: float
    v_os: float

    def to_dict(self) -> dict:
        return {"t1": self.t1, "s_t1": self.s_t1, "dT": self.dT, "v_os": self.v_os}


def time_to_lead_speed(v0: float, v_plateau: float, lim: LimitModel) -> float:
    """Time for the max-acceleration trajectory to climb from ``v0`` to ``v_plateau``."""
    if v_plateau < v0:
        raise NoSolutionError("v_plateau below v0: not an acceleration episode")
    if v_plateau >= lim.accel_asymptote:
        raise NoSolutionError(
            f"v_plateau {v_plateau} unreachable, asymptote is {lim.accel_asymptote}")
    if lim.beta == 0:
        return (v_plateau - v0) / lim.a0
    v_inf = lim.accel_asymptote
    return -math.log((v_plateau - v_inf) / (v0 - v_inf)) / lim.beta


def max_spacing_at_t1(lead: LeadProfile, v0: float, lim: LimitModel, t0: float,
                      t1: float, quadrature: bool = False) -> float:
    """Gap opened over ``[t0, t1]`` while the follower accelerates at its bound.

    The lead term is integrated exactly for the built-in profiles, or by the
    trapezoid rule at 1 ms when ``quadrature`` is set.
    """
    if not t1 > t0:
        raise ValueError("t1 must be > t0")
    if quadrature:
        lead_d = lead_distance_quad(lead, t0, t1)
    else:
        lead_d = lead_distance(lead, t0, t1)
    return lead_d - max_accel_distance(v0, lim, t1 - t0)


def overshoot_speed(s_t1: float, v_plateau: float, params: AccParams, lim: LimitModel,
                    variant: str = "relative") -> OvershootSolution:
    """Peak follower speed after the gap ``s_t1`` has opened at the plateau.

    ``a*`` is frozen at ``v_plateau``. ``t1`` is not known here and is
    reported as NaN; :func:`solve_step_overshoot` fills it in.
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant: must be one of {VARIANTS}")
    k = gain_at(v_plateau, params)
    a_star = accel_bound(v_plateau, lim)
    excess = s_t1 - equilibrium_spacing(v_plateau, params)
    if excess < 0:
        raise NoSolutionError("gap below equilibrium at T1: no overshoot")
    qa = 0.5 * k * a_star
    qb = {"full": a_star + k * v_plateau,
          "truncated": k * v_plateau,
          "relative": a_star}[variant]
    qc = -k * excess
    disc = qb * qb - 4.0 * qa * qc
    if disc <= 0:
        raise NoSolutionError("non-positive discriminant: no overshoot")
    # numerically stable positive root of qa x^2 + qb x + qc, qc <= 0
    dT = 0.0 if qc == 0 else (-2.0 * qc) / (qb + math.sqrt(disc))
    return OvershootSolution(t1=math.nan, s_t1=s_t1, dT=dT, v_os=v_plateau + dT * a_star)


def solve_step_overshoot(lead: LeadProfile, params: AccParams, lim: LimitModel,
                         variant: str = "relative") -> OvershootSolution:
    """Chain the three steps for a lead that rises from ``lead.v0`` and holds.

    The follower starts in equilibrium at ``lead.v0`` and is assumed to
    saturate from the moment the lead starts accelerating.
    """
    if lead.kind != "ramp" or lead.v_final is None or lead.v_final <= lead.v0:
        raise ValueError("lead: need a rising ramp profile")
    v_plateau = float(lead.v_final)
    t0 = lead.t_start
    t1 = t0 + time_to_lead_speed(lead.v0, v_plateau, lim)
    if lead.t_end is not None and t1 > lead.t_end:
        raise NoSolutionError("lead reverts before the follower reaches the plateau")
    if generate_lead(lead, t1)[0] < v_plateau:
        raise NoSolutionError("follower reaches the plateau before the lead does")
    s_t1 = equilibrium_spacing(lead.v0, params) + max_spacing_at_t1(lead, lead.v0, lim, t0, t1)
    sol = overshoot_speed(s_t1, v_plateau, params, lim, variant)
    return OvershootSolution(t1=t1, s_t1=sol.s_t1, dT=sol.dT, v_os=sol.v_os)

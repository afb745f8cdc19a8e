"""Lead vehicle speed signals."""

from __future__ import annotations

import math

from ..core import LeadProfile


def _approach(v_from: float, v_to: float, rate: float, dt: float) -> tuple[float, float]:
    """Speed and acceleration ``dt`` seconds into a constant-rate move."""
    t_move = abs(v_to - v_from) / rate
    if dt >= t_move:
        return v_to, 0.0
    sign = 1.0 if v_to > v_from else -1.0
    return v_from + sign * rate * dt, sign * rate


def _approach_distance(v_from: float, v_to: float, rate: float, dt: float) -> float:
    t_move = abs(v_to - v_from) / rate
    sign = 1.0 if v_to > v_from else -1.0
    if dt <= t_move:
        return v_from * dt + 0.5 * sign * rate * dt * dt
    return v_from * t_move + 0.5 * sign * rate * t_move * t_move + v_to * (dt - t_move)


def _ramp_target(profile: LeadProfile) -> float:
    return 0.0 if profile.kind == "stop_at_light" else float(profile.v_final)


def _reverts(profile: LeadProfile) -> bool:
    return profile.kind == "ramp" and profile.t_end is not None


def generate_lead(profile: LeadProfile, t: float) -> tuple[float, float]:
    """Lead speed and acceleration at time ``t``."""
    kind = profile.kind
    if kind == "constant" or t < profile.t_start:
        return profile.v0, 0.0

    if kind == "sine_sum":
        if profile.t_end is not None and t >= profile.t_end:
            return profile.v0, 0.0
        tau = t - profile.t_start
        v = profile.v0 + sum(m * math.sin(w * tau) for m, w in profile.components)
        a = sum(m * w * math.cos(w * tau) for m, w in profile.components)
        return max(0.0, v), a

    rate = abs(profile.a_lead)
    target = _ramp_target(profile)
    if _reverts(profile) and t >= profile.t_end:
        v_turn, _ = _approach(profile.v0, target, rate, profile.t_end - profile.t_start)
        return _approach(v_turn, profile.v0, rate, t - profile.t_end)
    return _approach(profile.v0, target, rate, t - profile.t_start)


def _distance_from_zero(profile: LeadProfile, t: float) -> float:
    kind = profile.kind
    t0 = profile.t_start
    if kind == "constant" or t <= t0:
        return profile.v0 * t
    if kind == "sine_sum":
        t_hi = t if profile.t_end is None else min(t, profile.t_end)
        d = profile.v0 * t
        for m, w in profile.components:
            d += m * (1.0 - math.cos(w * (t_hi - t0))) / w
        return d
    rate = abs(profile.a_lead)
    target = _ramp_target(profile)
    d = profile.v0 * t0
    if _reverts(profile) and t > profile.t_end:
        d += _approach_distance(profile.v0, target, rate, profile.t_end - t0)
        v_turn, _ = _approach(profile.v0, target, rate, profile.t_end - t0)
        return d + _approach_distance(v_turn, profile.v0, rate, t - profile.t_end)
    return d + _approach_distance(profile.v0, target, rate, t - t0)


def lead_distance(profile: LeadProfile, t0: float, t1: float) -> float:
    """Exact ``integral of v_lead`` over ``[t0, t1]``."""
    return _distance_from_zero(profile, t1) - _distance_from_zero(profile, t0)


def lead_distance_quad(profile: LeadProfile, t0: float, t1: float, h: float = 1e-3) -> float:
    """Trapezoid-rule ``integral of v_lead`` over ``[t0, t1]`` at step ``h``."""
    n = max(1, int(math.ceil((t1 - t0) / h)))
    step = (t1 - t0) / n
    total = 0.5 * (generate_lead(profile, t0)[0] + generate_lead(profile, t1)[0])
    for i in range(1, n):
        total += generate_lead(profile, t0 + i * step)[0]
    return total * step

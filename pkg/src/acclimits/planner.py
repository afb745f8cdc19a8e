"""Upper-level linear ACC planner driven by the lead vehicle's speed."""

from __future__ import annotations

import bisect
from dataclasses import dataclass

from .core import AccParams


@dataclass(frozen=True)
class PlannerInput:
    s: float
    v_lead: float
    v_ego: float


def gain_at(v: float, params: AccParams) -> float:
    """Scheduled gap gain ``k_v`` at speed ``v``."""
    table = params.gain_table
    if not table:
        return params.k_v
    idx = bisect.bisect_right([v_from for v_from, _ in table], v)
    return params.k_v if idx == 0 else table[idx - 1][1]


def target_speed(inp: PlannerInput, params: AccParams) -> float:
    """``v_lead + k * (s - tau * v_lead - delta)`` clipped to ``[0, v_set]``.

    The gain is scheduled on the ego speed.
    """
    k = gain_at(inp.v_ego, params)
    v = inp.v_lead + k * (inp.s - params.tau * inp.v_lead - params.delta)
    return min(params.v_set, max(0.0, v))

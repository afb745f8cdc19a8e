"""Shared value types and the speed-dependent limit models.

Units are SI. Accelerations are signed, braking is negative. Spacing is
``x_lead - x_ego`` between point masses; the standstill gap ``delta``
absorbs vehicle length, so a crash is ``spacing <= 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

LEAD_KINDS = ("constant", "sine_sum", "ramp", "emergency_brake", "stop_at_light")


def _require(cond: bool, name: str, msg: str) -> None:
    if not cond:
        raise ValueError(f"{name}: {msg}")


@dataclass(frozen=True)
class AccParams:
    """Planner parameters of the linear ACC.

    ``k_v`` is the gain below the first breakpoint of ``gain_table``. Each
    ``(v_from, gain)`` entry of the table applies for speeds ``>= v_from``.
    """

    k_v: float = 0.5
    tau: float = 1.5
    delta: float = 2.0
    v_set: float = 40.0
    gain_table: tuple[tuple[float, float], ...] = ()

    def __post_init__(self):
        _require(self.k_v > 0, "k_v", "must be > 0")
        _require(self.tau > 0, "tau", "must be > 0")
        _require(self.delta >= 0, "delta", "must be >= 0")
        _require(self.v_set > 0, "v_set", "must be > 0")
        table = tuple(sorted((float(v), float(k)) for v, k in self.gain_table))
        for v_from, gain in table:
            _require(v_from >= 0, "gain_table", "breakpoints must be >= 0")
            _require(gain > 0, "gain_table", "gains must be > 0")
        object.__setattr__(self, "gain_table", table)

    @classmethod
    def marginal(cls, tau: float = 1.5, **kwargs) -> AccParams:
        """Parameters on the string-stability boundary, ``k_v = 2 / tau``."""
        return cls(k_v=2.0 / tau, tau=tau, **kwargs)

    @classmethod
    def from_k_tau(cls, k_tau: float, tau: float = 1.5, **kwargs) -> AccParams:
        return cls(k_v=k_tau / tau, tau=tau, **kwargs)


@dataclass(frozen=True)
class LimitModel:
    """Affine acceleration and deceleration bounds.

    accel: ``a0 + (v_c - v) * beta``
    decel: ``-(d0 + (v_c - v) * theta)``, so braking authority shrinks as
    speed rises.
    """

    a0: float = 0.4
    beta: float = 0.015
    v_c: float = 40.0
    d0: float = 2.5
    theta: float = 0.03

    def __post_init__(self):
        _require(self.a0 > 0, "a0", "must be > 0")
        _require(self.beta >= 0, "beta", "must be >= 0")
        _require(self.v_c > 0, "v_c", "must be > 0")
        _require(self.d0 > 0, "d0", "must be > 0")
        _require(self.theta >= 0, "theta", "must be >= 0")

    @property
    def accel_asymptote(self) -> float:
        """Speed approached under sustained maximum acceleration."""
        if self.beta == 0:
            return math.inf
        return self.a0 / self.beta + self.v_c


@dataclass(frozen=True)
class VehicleState:
    x: float
    v: float
    a: float = 0.0
    v_pid: float = 0.0
    i_term: float = 0.0

    def __post_init__(self):
        _require(self.v >= 0, "v", "vehicles do not reverse")


@dataclass(frozen=True)
class LeadProfile:
    """Parametric speed signal of the platoon leader.

    kind
        ``constant``: ``v0`` throughout.
        ``sine_sum``: ``v0 + sum(M * sin(omega * (t - t_start)))`` on
        ``[t_start, t_end)``, ``v0`` elsewhere.
        ``ramp``: from ``t_start`` move toward ``v_final`` at ``|a_lead|``;
        if ``t_end`` is set, move back to ``v0`` from ``t_end`` (a cyclic dip
        or bump).
        ``emergency_brake``: a ramp toward ``v_final`` that never reverts.
        ``stop_at_light``: a ramp down to standstill.
    """

    kind: str = "constant"
    v0: float = 20.0
    components: tuple[tuple[float, float], ...] = ()
    v_final: float | None = None
    a_lead: float = 2.0
    t_start: float = 0.0
    t_end: float | None = None

    def __post_init__(self):
        _require(self.kind in LEAD_KINDS, "kind", f"must be one of {LEAD_KINDS}")
        _require(self.v0 >= 0, "v0", "must be >= 0")
        comps = tuple((float(m), float(w)) for m, w in self.components)
        object.__setattr__(self, "components", comps)
        if self.kind == "sine_sum":
            _require(len(comps) > 0, "components", "sine_sum needs at least one component")
            for m, w in comps:
                _require(m > 0, "components", "amplitudes must be > 0")
                _require(w > 0, "components", "frequencies must be > 0")
            # worst case of the sum; keeps the sampled speed non-negative
            _require(self.v0 >= sum(m for m, _ in comps), "components",
                     "amplitude sum exceeds v0, speed would go negative")
        if self.kind in ("ramp", "emergency_brake"):
            _require(self.v_final is not None and self.v_final >= 0,
                     "v_final", "ramp profiles need v_final >= 0")
        if self.kind in ("ramp", "emergency_brake", "stop_at_light"):
            _require(self.a_lead != 0, "a_lead", "must be non-zero")
        _require(self.t_start >= 0, "t_start", "must be >= 0")
        if self.t_end is not None:
            _require(self.t_end >= self.t_start, "t_end", "must be >= t_start")


def equilibrium_spacing(v: float, params: AccParams) -> float:
    """Constant-time-headway gap ``tau * v + delta``."""
    return params.tau * v + params.delta


def accel_bound(v: float, lim: LimitModel | None) -> float:
    """Largest admissible acceleration at speed ``v`` (``inf`` when unbounded).

    Above ``v_c`` the value keeps falling and may turn negative.
    """
    if lim is None:
        return math.inf
    return lim.a0 + (lim.v_c - v) * lim.beta


def decel_bound(v: float, lim: LimitModel | None) -> float:
    """Most negative admissible acceleration at speed ``v`` (``-inf`` when unbounded)."""
    if lim is None:
        return -math.inf
    return -(lim.d0 + (lim.v_c - v) * lim.theta)

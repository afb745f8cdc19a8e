"""String stability of the unconstrained linear ACC.

Differentiating the planner law gives the follower dynamics

    a_ego = k_v * (v_lead - v_ego) + (1 - k_v * tau) * a_lead

whose speed-to-speed transfer function is first order,

    G(s) = ((1 - k_v * tau) * s + k_v) / (s + k_v).

``|G(jw)| <= 1`` for all ``w`` iff ``|1 - k_v * tau| <= 1``, i.e.
``k_v * tau <= 2`` for positive gains. At ``k_v * tau == 2`` the filter
is all-pass.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

MARGINAL_RTOL = 1e-12


class Verdict(str, enum.Enum):
    STRING_STABLE = "string_stable"
    MARGINAL = "marginal"
    UNSTABLE = "unstable"


@dataclass(frozen=True)
class StabilityReport:
    verdict: Verdict
    k_tau: float
    gains: tuple[tuple[float, float], ...]

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "k_tau": self.k_tau,
            "gains": [list(g) for g in self.gains],
        }


@dataclass(frozen=True)
class DampeningReport:
    dampens: bool
    verdict: Verdict
    gains: tuple[tuple[float, float], ...]

    def to_dict(self) -> dict:
        return {
            "dampens": self.dampens,
            "verdict": self.verdict.value,
            "gains": [list(g) for g in self.gains],
        }


def ss_condition(k_v: float, tau: float) -> Verdict:
    if k_v <= 0 or tau <= 0:
        raise ValueError("k_v and tau must be > 0")
    k_tau = k_v * tau
    if math.isclose(k_tau, 2.0, rel_tol=MARGINAL_RTOL, abs_tol=0.0):
        return Verdict.MARGINAL
    return Verdict.STRING_STABLE if k_tau < 2.0 else Verdict.UNSTABLE


def tf_magnitude(k_v: float, tau: float, omega):
    """``|G(j omega)|``; accepts scalars or arrays of ``omega``."""
    w2 = np.square(omega)
    k2 = k_v * k_v
    c = 1.0 - k_v * tau
    mag = np.sqrt((k2 + c * c * w2) / (k2 + w2))
    return float(mag) if np.ndim(mag) == 0 else mag


def tf_phase(k_v: float, tau: float, omega):
    """Phase of ``G(j omega)`` in radians."""
    w = np.asarray(omega, dtype=float)
    c = 1.0 - k_v * tau
    return np.angle(k_v + 1j * c * w) - np.angle(k_v + 1j * w)


def frequency_grid(n: int = 64, lo: float = 0.01, hi: float = 10.0) -> np.ndarray:
    return np.logspace(math.log10(lo), math.log10(hi), n)


def analyze(k_v: float, tau: float, omegas: Iterable[float] | None = None) -> StabilityReport:
    omegas = frequency_grid() if omegas is None else np.asarray(list(omegas), dtype=float)
    mags = np.atleast_1d(tf_magnitude(k_v, tau, omegas))
    gains = tuple((float(w), float(m)) for w, m in zip(omegas, mags))
    return StabilityReport(ss_condition(k_v, tau), k_v * tau, gains)


def dampening_verdict(components: Sequence[tuple[float, float]], k_v: float,
                      tau: float) -> DampeningReport:
    """Check every sinusoidal component of a lead perturbation separately.

    The follower is LTI, so the response to a sum of sines is the sum of
    the per-component responses and each is scaled by ``|G|`` at its own
    frequency. The perturbation dampens iff no component is amplified.
    """
    if not components:
        raise ValueError("components: need at least one (M, omega) pair")
    gains = []
    for m, w in components:
        if m <= 0:
            raise ValueError("components: amplitudes must be > 0")
        gains.append((float(w), tf_magnitude(k_v, tau, w)))
    verdict = ss_condition(k_v, tau)
    # marginal gains sit at 1 up to rounding
    dampens = verdict is not Verdict.UNSTABLE and all(g <= 1.0 + 1e-12 for _, g in gains)
    return DampeningReport(dampens, verdict, tuple(gains))


def ode_response(k_v: float, tau: float, M: float, omega: float, v_eq: float, t):
    """Follower speed for lead speed ``v_eq + M sin(omega t)`` from equilibrium.

    Closed-form solution of
    ``dv/dt = k_v v_eq + k_v M sin(wt) + (1 - k_v tau) M w cos(wt) - k_v v``
    with ``v(0) = v_eq``.
    """
    t = np.asarray(t, dtype=float)
    k2 = k_v * k_v
    w2 = omega * omega
    num = (k2 * v_eq
           + np.exp(-k_v * t) * k2 * M * tau * omega
           + v_eq * w2
           - k2 * M * tau * omega * np.cos(omega * t)
           + M * (k2 - k_v * tau * w2 + w2) * np.sin(omega * t))
    out = num / (k2 + w2)
    return float(out) if out.ndim == 0 else out


def ode_rhs(t, v, k_v: float, tau: float, M: float, omega: float, v_eq: float):
    """Right-hand side of the follower ODE under a sinusoidal leader."""
    return (k_v * (v_eq + M * np.sin(omega * t) - v)
            + (1.0 - k_v * tau) * M * omega * np.cos(omega * t))

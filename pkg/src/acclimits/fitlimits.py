"""Recover affine acceleration limits from logged drives.

Each drive that pushes against its bound contributes one tipping point:
the largest acceleration held over a short window, paired with the speed
at the middle of that window. A straight line through the points gives
the limit. ``v_c`` is fixed because intercept and slope only pin two of
the three parameters.
"""

from __future__ import annotations

import warnings
from collections.abc import Sequence

import numpy as np

from .actuation import max_accel_speed
from .core import LimitModel, accel_bound

Drive = tuple[np.ndarray, np.ndarray, np.ndarray]

V_C = 40.0


def _window_samples(t: np.ndarray, window: float) -> int:
    dt = float(np.median(np.diff(t)))
    half = int(round(0.5 * window / dt))
    return 2 * max(half, 0) + 1


def extract_tipping_points(drives: Sequence[Drive], window: float = 0.5,
                           sign: int = 1) -> list[tuple[float, float]]:
    """One ``(v*, a*)`` per drive from a centered moving average of ``a``.

    ``sign=+1`` looks for the strongest acceleration, ``sign=-1`` for the
    strongest braking. Drives without any episode of that sign, or shorter
    than the window, are skipped with a warning.
    """
    if sign not in (1, -1):
        raise ValueError("sign: must be +1 or -1")
    if window <= 0:
        raise ValueError("window: must be > 0")
    points = []
    for i, (t, v, a) in enumerate(drives):
        t, v, a = (np.asarray(x, dtype=float) for x in (t, v, a))
        if not (t.shape == v.shape == a.shape) or t.ndim != 1:
            raise ValueError(f"drives[{i}]: t, v, a must be 1-D and equally long")
        if t.size < 2:
            warnings.warn(f"drives[{i}]: too short, skipped", stacklevel=2)
            continue
        n = _window_samples(t, window)
        if n > t.size:
            warnings.warn(f"drives[{i}]: shorter than the window, skipped", stacklevel=2)
            continue
        smooth = sign * np.convolve(a, np.ones(n) / n, mode="valid")
        j = int(np.argmax(smooth))
        if smooth[j] <= 0:
            warnings.warn(f"drives[{i}]: no {'acceleration' if sign > 0 else 'braking'}"
                          " episode, skipped", stacklevel=2)
            continue
        centre = j + n // 2
        points.append((float(v[centre]), float(sign * smooth[j])))
    return points


def _line(points: Sequence[tuple[float, float]]) -> tuple[float, float]:
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    if np.unique(pts[:, 0]).size < 2:
        raise ValueError("points: need at least 2 distinct speeds, fit is underdetermined")
    design = np.column_stack([np.ones(len(pts)), pts[:, 0]])
    (c0, c1), *_ = np.linalg.lstsq(design, pts[:, 1], rcond=None)
    return float(c0), float(c1)


def _non_negative(value: float, name: str) -> float:
    if value < 0:
        warnings.warn(f"{name}: fitted slope {value:.3g} is negative, clamped to 0",
                      stacklevel=3)
        return 0.0
    return value


def fit_linear_limit(points: Sequence[tuple[float, float]], v_c: float = V_C,
                     base: LimitModel | None = None) -> LimitModel:
    """Least-squares ``a = c0 + c1 v`` mapped to ``(a0, beta)`` at fixed ``v_c``.

    ``c1 = -beta`` and ``c0 = a0 + beta * v_c``. A rising line would mean
    a negative ``beta``; it is clamped to 0 with a warning. The braking
    side is copied from ``base`` (defaults when omitted).
    """
    c0, c1 = _line(points)
    beta = _non_negative(-c1, "beta")
    base = base or LimitModel()
    return LimitModel(a0=c0 - beta * v_c, beta=beta, v_c=v_c, d0=base.d0, theta=base.theta)


def fit_decel_limit(points: Sequence[tuple[float, float]], v_c: float = V_C,
                    base: LimitModel | None = None) -> LimitModel:
    """Mirror of :func:`fit_linear_limit` for braking points (``a < 0``).

    The bound ``-(d0 + (v_c - v) theta)`` has slope ``theta`` and intercept
    ``-(d0 + theta * v_c)``.
    """
    c0, c1 = _line(points)
    theta = _non_negative(c1, "theta")
    base = base or LimitModel()
    return LimitModel(a0=base.a0, beta=base.beta, v_c=v_c, d0=-c0 - theta * v_c, theta=theta)


def synthetic_drive(v0: float, lim: LimitModel, duration: float = 4.0, dt: float = 0.02,
                    cruise: float = 2.0, sign: int = 1, noise: float = 0.0,
                    rng: np.random.Generator | None = None) -> Drive:
    """Cruise at ``v0``, saturate one bound for ``duration``, then cruise again.

    Speeds follow the closed-form saturated trajectory. Gaussian noise of
    standard deviation ``noise`` is added to the logged acceleration only.
    """
    n_cruise = int(round(cruise / dt))
    n_sat = int(round(duration / dt))
    idx = np.arange(2 * n_cruise + n_sat + 1)
    t = idx * dt
    tau = np.clip(idx - n_cruise, 0, n_sat) * dt
    saturated = (idx >= n_cruise) & (idx < n_cruise + n_sat)
    if sign > 0:
        v = max_accel_speed(v0, lim, tau)
        a = np.where(saturated, accel_bound(v, lim), 0.0)
    else:
        # closed form of dv/dt = -(d0 + (v_c - v) theta)
        if lim.theta == 0:
            v = v0 - lim.d0 * tau
        else:
            v_star = lim.v_c - lim.d0 / lim.theta
            v = (v0 - v_star) * np.exp(lim.theta * tau) + v_star
        a = np.where(saturated & (v > 0), -(lim.d0 + (lim.v_c - v) * lim.theta), 0.0)
        v = np.maximum(v, 0.0)
    if noise > 0:
        rng = rng or np.random.default_rng(0)
        a = a + rng.normal(0.0, noise, size=a.shape)
    return t, np.asarray(v, dtype=float), np.asarray(a, dtype=float)

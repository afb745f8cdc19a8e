"""Traffic-level summaries of a platoon run."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .engine import CrashEvent, TrajectoryLog


@dataclass(frozen=True)
class MetricsReport:
    queue_length: int
    congestion_duration_s: float
    peak_deviation_mps: tuple[float, ...]
    amplification: tuple[float, ...]
    min_spacing_m: float
    crashes: tuple[CrashEvent, ...]
    # number of separate congested episodes per vehicle
    congested_intervals: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "queue_length": self.queue_length,
            "congestion_duration_s": self.congestion_duration_s,
            "peak_deviation_mps": list(self.peak_deviation_mps),
            "min_spacing_m": self.min_spacing_m,
            "crashes": [{"t": c.t, "vehicle": c.vehicle} for c in self.crashes],
        }


def count_runs(mask: np.ndarray) -> int:
    """Number of maximal runs of ``True`` in a 1-D boolean array."""
    mask = np.asarray(mask, dtype=bool)
    if mask.size == 0:
        return 0
    return int(mask[0]) + int(np.count_nonzero(mask[1:] & ~mask[:-1]))


def compute_metrics(log: TrajectoryLog, v_eq: float,
                    congestion_fraction: float = 0.9) -> MetricsReport:
    """Queue length, congestion duration and wave amplification of a run.

    A vehicle is congested at a tick when its speed is below
    ``congestion_fraction * v_eq``. Queue length is the largest number of
    simultaneously congested vehicles; congestion duration is the time
    during which at least one vehicle is congested.
    """
    dt = float(log.t[1] - log.t[0]) if log.n_ticks > 1 else 0.0
    congested = log.v < congestion_fraction * v_eq
    per_tick = congested.sum(axis=1)
    queue = int(per_tick.max()) if per_tick.size else 0
    duration = float(np.count_nonzero(per_tick) * dt)

    peak = np.abs(log.v - v_eq).max(axis=0)
    with np.errstate(divide="ignore", invalid="ignore"):
        amp = np.where(peak[:-1] > 0, peak[1:] / peak[:-1], np.nan)
    follower_spacing = log.spacing[:, 1:]
    min_spacing = float(np.min(follower_spacing)) if follower_spacing.size else float("inf")

    return MetricsReport(
        queue_length=queue,
        congestion_duration_s=round(duration, 9),
        peak_deviation_mps=tuple(float(p) for p in peak),
        amplification=tuple(float(r) for r in amp),
        min_spacing_m=min_spacing,
        crashes=tuple(log.crashes),
        congested_intervals=tuple(count_runs(congested[:, j]) for j in range(log.n_vehicles)),
    )


def steady_amplitude(signal: np.ndarray, t: np.ndarray, t_from: float) -> float:
    """Half the peak-to-peak excursion of ``signal`` for ``t >= t_from``."""
    tail = np.asarray(signal)[np.asarray(t) >= t_from]
    return 0.5 * float(tail.max() - tail.min())

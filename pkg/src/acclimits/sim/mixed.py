"""Heterogeneous platoons drawn from ranges over ``(k, tau, a0, beta, d0, theta)``."""

from __future__ import annotations

from dataclasses import dataclass, fields

import numpy as np

from ..core import AccParams, LimitModel

Range = tuple[float, float]


@dataclass(frozen=True)
class ParameterRanges:
    """Closed intervals for each sampled parameter; ``lo == hi`` pins it."""

    k: Range = (0.3, 1.2)
    tau: Range = (1.0, 2.0)
    a0: Range = (0.3, 0.6)
    beta: Range = (0.01, 0.02)
    d0: Range = (1.5, 3.0)
    theta: Range = (0.0, 0.04)

    def __post_init__(self):
        for f in fields(self):
            lo, hi = getattr(self, f.name)
            if lo > hi:
                raise ValueError(f"{f.name}: lower bound exceeds upper bound")
            object.__setattr__(self, f.name, (float(lo), float(hi)))


def sample_mixed_platoon(seed: int, n: int, ranges: ParameterRanges = ParameterRanges(),
                         delta: float = 2.0, v_set: float = 40.0,
                         v_c: float = 40.0) -> list[tuple[AccParams, LimitModel]]:
    """Draw ``n`` independent uniform parameter sets, reproducible from ``seed``."""
    rng = np.random.default_rng(seed)
    names = [f.name for f in fields(ranges)]
    lo = np.array([getattr(ranges, name)[0] for name in names])
    hi = np.array([getattr(ranges, name)[1] for name in names])
    draws = rng.uniform(lo, hi, size=(n, len(names)))
    out = []
    for row in draws:
        p = dict(zip(names, (float(x) for x in row)))
        out.append((
            AccParams(k_v=p["k"], tau=p["tau"], delta=delta, v_set=v_set),
            LimitModel(a0=p["a0"], beta=p["beta"], v_c=v_c, d0=p["d0"], theta=p["theta"]),
        ))
    return out

"""Gain |G(jw)| for several k_v*tau against two-vehicle simulations.

    python scripts/frequency_response.py --out results
"""
from __future__ import annotations

import argparse
import math
from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from acclimits import AccParams, LeadProfile, Scenario, VehicleConfig, run
from acclimits.sim import steady_amplitude
from acclimits.stability import frequency_grid, tf_magnitude

TAU = 1.5


def simulated_ratio(k_tau: float, w: float, dt: float = 0.01) -> float:
    k = k_tau / TAU
    period = 2 * math.pi / w
    settle = 40.0 / k
    lead = LeadProfile(kind="sine_sum", v0=20.0, components=((1.0, w),))
    cfg = VehicleConfig(params=AccParams(k_v=k, tau=TAU), limits=None, actuation="ideal")
    log = run(Scenario(followers=(cfg,), lead=lead, dt=dt, horizon=settle + 6 * period))
    return steady_amplitude(log.v[:, 1], log.t, settle + 3 * period)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", type=Path, default=Path("results"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    w = frequency_grid(200, 0.01, 10)
    fig, ax = plt.subplots(figsize=(6, 4))
    for k_tau in (0.5, 1.0, 1.9, 2.0, 2.1, 3.0):
        line, = ax.semilogx(w, tf_magnitude(k_tau / TAU, TAU, w), label=f"k tau = {k_tau}")
        pts = (0.2, 0.5, 1.0)
        sim = [simulated_ratio(k_tau, x) for x in pts]
        ax.semilogx(pts, sim, "o", color=line.get_color(), ms=4)
        print(k_tau, " ".join(f"{x}:{r:.4f}" for x, r in zip(pts, sim)))
    ax.axhline(1.0, color="k", lw=0.5)
    ax.set_xlabel("omega [rad/s]")
    ax.set_ylabel("|G|")
    ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(args.out / "frequency_response.png", dpi=150)


if __name__ == "__main__":
    main()

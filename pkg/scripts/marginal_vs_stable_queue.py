"""Queue length and congestion duration: k_v = 2/tau against k_v tau = 0.5.

Both platoons have 20 vehicles, ideal actuation and no limits; the leader
dips from 25 to 10 m/s and recovers.
"""
from __future__ import annotations

import argparse
from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

from acclimits import AccParams, LeadProfile, Scenario, VehicleConfig, compute_metrics, run


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--tau", type=float, default=1.5)
    ap.add_argument("--out", type=Path, default=Path("results"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    lead = LeadProfile(kind="ramp", v0=25, v_final=10, a_lead=3, t_start=5, t_end=15)
    cases = {"k tau = 2": AccParams.marginal(args.tau),
             "k tau = 0.5": AccParams.from_k_tau(0.5, args.tau)}
    fig, axes = plt.subplots(1, 2, figsize=(11, 4), sharey=True)
    for ax, (name, params) in zip(axes, cases.items()):
        cfg = VehicleConfig(params=params, limits=None, actuation="ideal")
        log = run(Scenario(followers=(cfg,) * 19, lead=lead, horizon=200))
        m = compute_metrics(log, 25.0)
        print(f"{name}: queue {m.queue_length}, congested {m.congestion_duration_s:.1f} s")
        im = ax.imshow(log.v.T, aspect="auto", origin="lower", cmap="RdYlGn",
                       extent=(log.t[0], log.t[-1], -0.5, log.n_vehicles - 0.5), vmin=8, vmax=27)
        ax.set_title(f"{name}: queue {m.queue_length}, {m.congestion_duration_s:.0f} s")
        ax.set_xlabel("time [s]")
    axes[0].set_ylabel("vehicle")
    fig.colorbar(im, ax=axes, label="speed [m/s]")
    fig.savefig(args.out / "marginal_vs_stable_queue.png", dpi=150)


if __name__ == "__main__":
    main()

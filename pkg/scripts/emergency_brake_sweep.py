"""Lead brakes from 25 to 12.5 m/s at -5 m/s^2; minimum spacing against the
follower's deceleration bound."""
from __future__ import annotations

import argparse
from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from acclimits import AccParams, LeadProfile, LimitModel, Scenario, VehicleConfig, run
from acclimits.safety import trajectory_safety


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=float, default=1.0)
    ap.add_argument("--out", type=Path, default=Path("results"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    lead = LeadProfile(kind="emergency_brake", v0=25, v_final=12.5, a_lead=-5, t_start=5)
    params = AccParams(k_v=args.k)
    bounds = np.linspace(2.0, 7.0, 21)
    mins, logs = [], {}
    for d0 in bounds:
        cfg = VehicleConfig(params=params, limits=LimitModel(d0=d0, theta=0.0))
        log = run(Scenario(followers=(cfg,), lead=lead, horizon=60))
        rep = trajectory_safety(log, params.delta)
        mins.append(rep.min_spacing)
        logs[round(d0, 2)] = log
        print(f"d0 {d0:4.2f}: min spacing {rep.min_spacing:6.2f} m, "
              f"min TTC {rep.min_ttc:6.2f} s, takeover at {rep.takeover_speed}")

    fig, (ax_s, ax_v) = plt.subplots(1, 2, figsize=(10, 3.5))
    ax_s.plot(bounds, mins, "o-")
    ax_s.axhline(params.delta, color="r", lw=0.8)
    ax_s.set_xlabel("|decel bound| [m/s^2]")
    ax_s.set_ylabel("min spacing [m]")
    for d0 in (2.5, 5.0):
        log = logs[d0]
        ax_v.plot(log.t, log.spacing[:, 1], label=f"|bound| {d0}")
    ax_v.set_xlabel("time [s]")
    ax_v.set_ylabel("spacing [m]")
    ax_v.legend()
    fig.tight_layout()
    fig.savefig(args.out / "emergency_brake_sweep.png", dpi=150)


if __name__ == "__main__":
    main()

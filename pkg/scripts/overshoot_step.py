"""Follower overshoot after an aggressive lead speed-up, with the analytic peak.

    python scripts/overshoot_step.py --v0 20 --v1 30 --a-lead 3
"""
from __future__ import annotations

import argparse
from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

from acclimits import AccParams, LeadProfile, LimitModel, Scenario, VehicleConfig, run
from acclimits.overshoot import VARIANTS, solve_step_overshoot


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--v0", type=float, default=20.0)
    ap.add_argument("--v1", type=float, default=30.0)
    ap.add_argument("--a-lead", type=float, default=3.0)
    ap.add_argument("--k", type=float, default=0.5)
    ap.add_argument("--out", type=Path, default=Path("results"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    lead = LeadProfile(kind="ramp", v0=args.v0, v_final=args.v1, a_lead=args.a_lead, t_start=5)
    params, lim = AccParams(k_v=args.k), LimitModel()
    log = run(Scenario(followers=(VehicleConfig(params=params, limits=lim),), lead=lead,
                       horizon=120))
    sol = solve_step_overshoot(lead, params, lim)
    print(f"simulated peak {log.v[:, 1].max():.3f} m/s")
    for v in VARIANTS:
        print(f"{v:>9}: v_os {solve_step_overshoot(lead, params, lim, v).v_os:.3f}")

    fig, (ax_v, ax_a) = plt.subplots(2, 1, figsize=(7, 6), sharex=True)
    ax_v.plot(log.t, log.v[:, 0], label="lead")
    ax_v.plot(log.t, log.v[:, 1], label="follower")
    ax_v.plot(log.t, log.v_target[:, 1], lw=0.8, label="planner target")
    ax_v.plot(log.t, log.v_pid[:, 1], lw=0.8, ls="--", label="setpoint")
    ax_v.axhline(sol.v_os, color="k", ls=":", label="analytic peak")
    ax_v.axvline(sol.t1, color="grey", lw=0.5)
    ax_v.set_ylabel("speed [m/s]")
    ax_v.legend(fontsize=7)
    ax_a.plot(log.t, log.a[:, 1])
    ax_a.set_ylabel("accel [m/s^2]")
    ax_a.set_xlabel("time [s]")
    fig.tight_layout()
    fig.savefig(args.out / "overshoot_step.png", dpi=150)


if __name__ == "__main__":
    main()

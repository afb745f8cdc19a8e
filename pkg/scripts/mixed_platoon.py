"""Randomised heterogeneous platoon: secondary waves, ordering effects, and
what one string-unstable member with weak brakes does."""
from __future__ import annotations

import argparse
from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from acclimits import AccParams, LeadProfile, LimitModel, Scenario, VehicleConfig, run
from acclimits.sim import ParameterRanges, compute_metrics, sample_mixed_platoon


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=3)
    ap.add_argument("--n", type=int, default=20)
    ap.add_argument("--unstable", type=int, default=5, help="index of the k tau = 2.6 member")
    ap.add_argument("--out", type=Path, default=Path("results"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    lead = LeadProfile(kind="ramp", v0=25, v_final=15, a_lead=2, t_start=5, t_end=15)
    draws = sample_mixed_platoon(args.seed, args.n - 1, ParameterRanges(k=(0.2, 0.5),
                                                                          tau=(1.2, 1.8)))
    base = [VehicleConfig(params=p, limits=lim) for p, lim in draws]
    weak = [VehicleConfig(params=c.params, limits=LimitModel(a0=c.limits.a0, beta=c.limits.beta,
                                                             d0=1.0, theta=c.limits.theta))
            for c in base]
    j = args.unstable
    weak[j] = VehicleConfig(params=AccParams.from_k_tau(2.6, weak[j].params.tau),
                            limits=weak[j].limits)
    variants = {"sampled order": base, "reversed order": base[::-1],
                "weak brakes + unstable member": weak}

    fig, axes = plt.subplots(1, 3, figsize=(15, 4), sharey=True)
    for ax, (name, fol) in zip(axes, variants.items()):
        log = run(Scenario(followers=tuple(fol), lead=lead, horizon=250, rng_seed=args.seed))
        m = compute_metrics(log, 25.0)
        print(f"{name}: queue {m.queue_length}, congested {m.congestion_duration_s:.1f} s, "
              f"max intervals {max(m.congested_intervals)}, min spacing {m.min_spacing_m:.2f} m, "
              f"crashes {len(m.crashes)}")
        im = ax.imshow(log.v.T, aspect="auto", origin="lower", cmap="RdYlGn", vmin=10, vmax=30,
                       extent=(log.t[0], log.t[-1], -0.5, log.n_vehicles - 0.5))
        for c in m.crashes:
            ax.plot(c.t, c.vehicle, "kx")
        ax.set_title(name, fontsize=9)
        ax.set_xlabel("time [s]")
    axes[0].set_ylabel("vehicle")
    fig.colorbar(im, ax=axes, label="speed [m/s]")
    fig.savefig(args.out / "mixed_platoon.png", dpi=150)
    np.save(args.out / "mixed_platoon_params.npy",
            np.array([[p.k_v, p.tau, lim.a0, lim.beta, lim.d0, lim.theta] for p, lim in draws]))


if __name__ == "__main__":
    main()

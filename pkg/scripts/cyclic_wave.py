"""One sinusoidal lead wave with limits on: small crest overshoot, larger
overshoot once the wave has passed."""
from __future__ import annotations

import argparse
import math
from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from acclimits import LeadProfile, Scenario, VehicleConfig, run


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--amplitude", type=float, default=5.0)
    ap.add_argument("--omega", type=float, default=0.3)
    ap.add_argument("--out", type=Path, default=Path("results"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    t_end = 5 + 2 * math.pi / args.omega
    lead = LeadProfile(kind="sine_sum", v0=25, components=((args.amplitude, args.omega),),
                       t_start=5, t_end=t_end)
    log = run(Scenario(followers=(VehicleConfig(),), lead=lead, horizon=120))
    wave = log.t < t_end
    crest = log.v[wave, 1].max() - log.v[wave, 0].max()
    after = np.abs(log.v[~wave, 1] - 25).max()
    print(f"crest overshoot {crest:.3f} m/s, after the wave {after:.3f} m/s")

    fig, ax = plt.subplots(figsize=(7, 3.5))
    ax.plot(log.t, log.v[:, 0], label="lead")
    ax.plot(log.t, log.v[:, 1], label="follower")
    ax.axvspan(5, t_end, color="grey", alpha=0.15)
    ax.set_xlabel("time [s]")
    ax.set_ylabel("speed [m/s]")
    ax.legend()
    fig.tight_layout()
    fig.savefig(args.out / "cyclic_wave.png", dpi=150)


if __name__ == "__main__":
    main()

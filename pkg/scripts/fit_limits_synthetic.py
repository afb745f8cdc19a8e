"""Tipping-point limit fitting on synthetic saturated drives.

Writes the drives as a trajectories.csv (one vehicle column per drive) so
the fit can be repeated with ``acclimits fit-limits --config
configs/fit_limits.json --out results/fit``.
"""
from __future__ import annotations

import argparse
from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from acclimits import LimitModel, TrajectoryLog
from acclimits.cli import write_outputs
from acclimits.core import accel_bound
from acclimits.fitlimits import extract_tipping_points, fit_linear_limit, synthetic_drive


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--noise", type=float, default=0.02)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", type=Path, default=Path("results"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    truth = LimitModel(a0=0.4, beta=0.015, v_c=40.0)
    rng = np.random.default_rng(args.seed)
    drives = [synthetic_drive(v0, truth, noise=args.noise, rng=rng)
              for v0 in np.linspace(5, 35, 13)]
    pts = extract_tipping_points(drives)
    fit = fit_linear_limit(pts)
    print(f"a0 {fit.a0:.4f} (true 0.4), beta {fit.beta:.5f} (true 0.015)")

    t = drives[0][0]
    v = np.column_stack([d[1] for d in drives])
    a = np.column_stack([d[2] for d in drives])
    log = TrajectoryLog(t=t, x=np.cumsum(v, axis=0) * (t[1] - t[0]), v=v, a=a, v_target=v,
                        v_pid=v, spacing=np.full(v.shape, np.nan))
    write_outputs(log, None, args.out / "drives")

    fig, ax = plt.subplots(figsize=(6, 4))
    for _, dv, da in drives:
        ax.plot(dv, da, lw=0.4, color="grey")
    pv = np.array(pts)
    ax.plot(pv[:, 0], pv[:, 1], "o", label="tipping points")
    vs = np.linspace(0, 45, 50)
    ax.plot(vs, accel_bound(vs, truth), "k--", label="true bound")
    ax.plot(vs, accel_bound(vs, fit), "r", label="fit")
    ax.set_xlabel("speed [m/s]")
    ax.set_ylabel("accel [m/s^2]")
    ax.legend()
    fig.tight_layout()
    fig.savefig(args.out / "fit_limits_synthetic.png", dpi=150)


if __name__ == "__main__":
    main()

"""Result files: trajectories.csv, metrics.json and an optional plot."""

from __future__ import annotations

import csv
import json
import warnings
from collections.abc import Mapping
from pathlib import Path

import numpy as np

from ..sim import MetricsReport, TrajectoryLog

CSV_HEADER = ("t", "vehicle", "x", "v", "a", "v_target", "v_pid", "spacing")


def _fmt(x: float) -> str:
    # fixed point is locale independent; NaN marks the leader's spacing
    return f"{x:.6f}"


def write_trajectories(log: TrajectoryLog, path: str | Path) -> None:
    """One row per tick and vehicle, tick-major, LF line endings."""
    with open(path, "w", newline="", encoding="ascii") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for k in range(log.n_ticks):
            t = _fmt(log.t[k])
            for j in range(log.n_vehicles):
                writer.writerow((t, j, _fmt(log.x[k, j]), _fmt(log.v[k, j]), _fmt(log.a[k, j]),
                                 _fmt(log.v_target[k, j]), _fmt(log.v_pid[k, j]),
                                 _fmt(log.spacing[k, j])))


def read_trajectories(path: str | Path) -> dict[int, dict[str, np.ndarray]]:
    """Columns of a trajectories.csv grouped by vehicle index."""
    rows: dict[int, list[list[float]]] = {}
    with open(path, newline="", encoding="ascii") as fh:
        reader = csv.reader(fh)
        header = tuple(next(reader, ()))
        if header != CSV_HEADER:
            raise ValueError(f"{path}: header must be {','.join(CSV_HEADER)}")
        for line in reader:
            rows.setdefault(int(line[1]), []).append([float(x) for x in line])
    out = {}
    for vehicle, data in rows.items():
        arr = np.asarray(data)
        out[vehicle] = {name: arr[:, i] for i, name in enumerate(CSV_HEADER) if name != "vehicle"}
    return out


def write_json(obj, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True, allow_nan=True)
        fh.write("\n")


def write_plot(log: TrajectoryLog, path: str | Path) -> bool:
    """Time-space and speed panels as SVG. Returns False without matplotlib."""
    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        warnings.warn("matplotlib not installed, plot skipped", stacklevel=2)
        return False
    fig, (ax_x, ax_v) = plt.subplots(2, 1, figsize=(8, 7), sharex=True)
    colors = plt.cm.viridis(np.linspace(0, 1, log.n_vehicles))
    for j in range(log.n_vehicles):
        ax_x.plot(log.t, log.x[:, j], color=colors[j], lw=0.8)
        ax_v.plot(log.t, log.v[:, j], color=colors[j], lw=0.8)
    ax_x.set_ylabel("position [m]")
    ax_v.set_ylabel("speed [m/s]")
    ax_v.set_xlabel("time [s]")
    fig.tight_layout()
    # fixed hash salt and no date keep the SVG reproducible
    matplotlib.rcParams["svg.hashsalt"] = "acclimits"
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
    return True


def write_outputs(log: TrajectoryLog, metrics: MetricsReport | None, out_dir: str | Path,
                  reports: Mapping[str, dict] | None = None, plot: bool = False) -> list[Path]:
    """Write the canonical CSV plus ``metrics.json`` and one JSON per report."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = [out / "trajectories.csv"]
    write_trajectories(log, written[0])
    if metrics is not None:
        written.append(out / "metrics.json")
        write_json(metrics.to_json(), written[-1])
    for name, report in (reports or {}).items():
        written.append(out / f"{name}.json")
        write_json(report, written[-1])
    if plot and write_plot(log, out / "plot.svg"):
        written.append(out / "plot.svg")
    return written

"""Subcommand implementations.

Each command is split into a ``load_*`` step that validates its document
(any failure there exits with 1) and a ``run_*`` step that computes and
writes results (failures exit with 2).
"""

from __future__ import annotations

import copy
import itertools
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any

from ..actuation import PiGains
from ..core import AccParams, LeadProfile, LimitModel
from ..fitlimits import extract_tipping_points, fit_decel_limit, fit_linear_limit
from ..overshoot import VARIANTS, solve_step_overshoot
from ..safety import safety_report
from ..sim import Scenario, VehicleConfig, compute_metrics, run
from ..stability import analyze, dampening_verdict
from .config import ConfigError, build_dataclass, check_keys, load_json, scenario_from_dict
from .outputs import read_trajectories, write_json, write_outputs


def _require_number(doc: dict, key: str, default: float) -> float:
    val = doc.get(key, default)
    if not isinstance(val, (int, float)) or isinstance(val, bool):
        raise ConfigError(f"{key}: expected a number")
    return float(val)


# simulate / safety ---------------------------------------------------------

def load_simulate(path: Path) -> Scenario:
    return scenario_from_dict(load_json(path))


def run_simulate(scenario: Scenario, out: Path, plot: bool = False) -> list[Path]:
    log = run(scenario)
    metrics = compute_metrics(log, scenario.equilibrium_speed)
    return write_outputs(log, metrics, out, plot=plot)


def run_safety(scenario: Scenario, out: Path, plot: bool = False) -> list[Path]:
    log = run(scenario)
    metrics = compute_metrics(log, scenario.equilibrium_speed)
    report = safety_report(log, [cfg.params for cfg in scenario.followers])
    return write_outputs(log, metrics, out, reports={"safety": report.to_dict()}, plot=plot)


# analyze-ss -----------------------------------------------------------------

def load_analyze_ss(path: Path) -> dict:
    doc = check_keys(load_json(path), {"params", "omegas", "components"}, "")
    params = build_dataclass(AccParams, doc.get("params", {}), "params")
    omegas = doc.get("omegas")
    if omegas is not None and (not isinstance(omegas, list) or not omegas
                               or any(not isinstance(w, (int, float)) or w <= 0 for w in omegas)):
        raise ConfigError("omegas: expected a non-empty list of positive numbers")
    comps = doc.get("components")
    if comps is not None:
        # reuse the profile's checks on (M, omega) pairs
        probe = {"kind": "sine_sum", "v0": 1e9, "components": comps}
        comps = build_dataclass(LeadProfile, probe, "components").components
    return {"params": params, "omegas": omegas, "components": comps}


def run_analyze_ss(job: dict, out: Path) -> list[Path]:
    p = job["params"]
    result = analyze(p.k_v, p.tau, job["omegas"]).to_dict()
    if job["components"]:
        result["dampening"] = dampening_verdict(job["components"], p.k_v, p.tau).to_dict()
    out.mkdir(parents=True, exist_ok=True)
    write_json(result, out / "stability.json")
    return [out / "stability.json"]


# overshoot ------------------------------------------------------------------

OVERSHOOT_KEYS = {"lead", "params", "limits", "pi", "variant", "simulate", "dt", "horizon"}


def load_overshoot(path: Path) -> dict:
    doc = check_keys(load_json(path), OVERSHOOT_KEYS, "")
    if "lead" not in doc:
        raise ConfigError("lead: required")
    lead = build_dataclass(LeadProfile, doc["lead"], "lead")
    if lead.kind != "ramp" or lead.v_final <= lead.v0:
        raise ConfigError("lead: need a rising ramp (kind 'ramp' with v_final > v0)")
    variant = doc.get("variant", "relative")
    if variant not in VARIANTS:
        raise ConfigError(f"variant: must be one of {VARIANTS}")
    dt = _require_number(doc, "dt", 0.1)
    horizon = _require_number(doc, "horizon", 60.0)
    cfg = VehicleConfig(params=build_dataclass(AccParams, doc.get("params", {}), "params"),
                        limits=build_dataclass(LimitModel, doc.get("limits", {}), "limits"),
                        pi=build_dataclass(PiGains, doc.get("pi", {}), "pi"))
    try:
        scenario = Scenario(followers=(cfg,), lead=lead, dt=dt, horizon=horizon)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    return {"scenario": scenario, "variant": variant, "simulate": bool(doc.get("simulate", True))}


def run_overshoot(job: dict, out: Path) -> list[Path]:
    scenario = job["scenario"]
    cfg = scenario.followers[0]
    sol = solve_step_overshoot(scenario.lead, cfg.params, cfg.limits, job["variant"])
    result = {"variant": job["variant"], **sol.to_dict(),
              "variants": {v: solve_step_overshoot(scenario.lead, cfg.params, cfg.limits, v).v_os
                           for v in VARIANTS}}
    written = []
    if job["simulate"]:
        log = run(scenario)
        result["simulated_peak"] = float(log.v[:, 1].max())
        written = write_outputs(log, None, out)
    out.mkdir(parents=True, exist_ok=True)
    write_json(result, out / "overshoot.json")
    return written + [out / "overshoot.json"]


# sweep ----------------------------------------------------------------------

def _set_path(doc: dict, dotted: str, value: Any) -> None:
    keys = dotted.split(".")
    node = doc
    for key in keys[:-1]:
        if isinstance(node, list):
            node = node[int(key)]
        else:
            node = node.setdefault(key, {})
    last = keys[-1]
    if isinstance(node, list):
        node[int(last)] = value
    else:
        node[last] = value


def load_sweep(path: Path) -> dict:
    doc = check_keys(load_json(path), {"base", "grid", "workers"}, "")
    grid = doc.get("grid")
    if not isinstance(grid, dict) or not grid:
        raise ConfigError("grid: expected a non-empty object of dot-path -> list of values")
    for key, values in grid.items():
        if not isinstance(values, list) or not values:
            raise ConfigError(f"grid.{key}: expected a non-empty list")
    workers = doc.get("workers", 1)
    if not isinstance(workers, int) or workers < 1:
        raise ConfigError("workers: must be an integer >= 1")
    names = list(grid)
    points = []
    for i, combo in enumerate(itertools.product(*(grid[k] for k in names))):
        overrides = dict(zip(names, combo))
        scen_doc = copy.deepcopy(doc.get("base", {}))
        try:
            for key, val in overrides.items():
                _set_path(scen_doc, key, val)
        except (IndexError, ValueError, TypeError, AttributeError) as exc:
            raise ConfigError(f"grid: cannot apply {overrides}: {exc}") from exc
        try:
            scenario = scenario_from_dict(scen_doc)
        except ConfigError as exc:
            raise ConfigError(f"grid point {i}: {exc}") from exc
        points.append({"id": i, "overrides": overrides, "scenario": scenario})
    return {"points": points, "workers": workers}


def _sweep_point(scenario: Scenario) -> dict:
    log = run(scenario)
    metrics = compute_metrics(log, scenario.equilibrium_speed)
    return metrics.to_json()


def run_sweep(job: dict, out: Path) -> list[Path]:
    points = job["points"]
    scenarios = [p["scenario"] for p in points]
    if job["workers"] == 1:
        results = [_sweep_point(s) for s in scenarios]
    else:
        with ProcessPoolExecutor(max_workers=job["workers"]) as pool:
            results = list(pool.map(_sweep_point, scenarios))
    # pool.map keeps input order, so ids line up however the work was scheduled
    rows = [{"id": p["id"], "overrides": p["overrides"], "metrics": m}
            for p, m in zip(points, results)]
    out.mkdir(parents=True, exist_ok=True)
    write_json({"points": rows}, out / "sweep.json")
    return [out / "sweep.json"]


# fit-limits -------------------------------------------------------------------

def load_fit_limits(path: Path) -> dict:
    doc = check_keys(load_json(path), {"trajectories", "vehicles", "window", "v_c", "decel"}, "")
    files = doc.get("trajectories")
    if isinstance(files, str):
        files = [files]
    if not isinstance(files, list) or not files or not all(isinstance(f, str) for f in files):
        raise ConfigError("trajectories: expected a CSV path or a list of paths")
    resolved = [(path.parent / f) for f in files]
    for f in resolved:
        if not f.is_file():
            raise ConfigError(f"trajectories: {f} not found")
    vehicles = doc.get("vehicles")
    if vehicles is not None and (not isinstance(vehicles, list)
                                 or not all(isinstance(v, int) for v in vehicles)):
        raise ConfigError("vehicles: expected a list of vehicle indices")
    window = _require_number(doc, "window", 0.5)
    if window <= 0:
        raise ConfigError("window: must be > 0")
    return {"files": resolved, "vehicles": vehicles, "window": window,
            "v_c": _require_number(doc, "v_c", 40.0), "decel": bool(doc.get("decel", True))}


def run_fit_limits(job: dict, out: Path) -> list[Path]:
    drives = []
    for f in job["files"]:
        for vehicle, cols in sorted(read_trajectories(f).items()):
            if job["vehicles"] is None or vehicle in job["vehicles"]:
                drives.append((cols["t"], cols["v"], cols["a"]))
    acc_pts = extract_tipping_points(drives, job["window"], sign=1)
    acc = fit_linear_limit(acc_pts, job["v_c"])
    result = {"accel": {"a0": acc.a0, "beta": acc.beta, "v_c": acc.v_c,
                        "points": [list(p) for p in acc_pts]},
              "decel": None}
    if job["decel"]:
        dec_pts = extract_tipping_points(drives, job["window"], sign=-1)
        try:
            dec = fit_decel_limit(dec_pts, job["v_c"])
        except ValueError as exc:
            # braking episodes are optional in a log; report instead of failing
            result["decel_error"] = str(exc)
        else:
            result["decel"] = {"d0": dec.d0, "theta": dec.theta, "v_c": dec.v_c,
                               "points": [list(p) for p in dec_pts]}
    out.mkdir(parents=True, exist_ok=True)
    write_json(result, out / "limits.json")
    return [out / "limits.json"]

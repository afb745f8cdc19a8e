"""JSON scenario documents.

A document names the platoon size, the leader and per-vehicle settings::

    {
      "n_vehicles": 3,
      "lead": {"kind": "ramp", "v0": 20, "v_final": 30, "a_lead": 3},
      "defaults": {"params": {"k_v": 0.5}, "limits": {"a0": 0.4}, "actuation": "pi"},
      "vehicles": [{}, {"params": {"k_v": 1.0}}]
    }

``defaults`` applies to every follower and ``vehicles`` (one entry per
follower) overrides it field by field. ``"limits": null`` disables the
bounds. An optional ``mixed`` section draws ``params`` and ``limits`` per
follower from ranges, seeded by ``rng_seed``; explicit ``vehicles``
entries still win.
"""

from __future__ import annotations

import dataclasses
import json
from pathlib import Path
from typing import Any

from ..actuation import PiGains
from ..core import AccParams, LeadProfile, LimitModel
from ..sim import ParameterRanges, Scenario, ScenarioError, VehicleConfig, sample_mixed_platoon

SCENARIO_KEYS = {"name", "n_vehicles", "dt", "horizon", "v_eq", "rng_seed", "lead",
                 "defaults", "vehicles", "mixed"}
VEHICLE_KEYS = {"params", "limits", "pi", "actuation", "v_init", "gap_init"}
MIXED_KEYS = {"ranges", "delta", "v_set", "v_c"}


class ConfigError(ValueError):
    """Invalid document; the message starts with the offending field path."""


def check_keys(doc: Any, allowed: set[str], where: str) -> dict:
    if not isinstance(doc, dict):
        raise ConfigError(f"{where or 'document'}: expected an object")
    unknown = sorted(set(doc) - allowed)
    if unknown:
        prefix = f"{where}." if where else ""
        raise ConfigError(f"{prefix}{unknown[0]}: unknown field")
    return doc


def _is_number(val: Any) -> bool:
    return isinstance(val, (int, float)) and not isinstance(val, bool)


def build_dataclass(cls, doc: Any, where: str):
    fields = {f.name: f for f in dataclasses.fields(cls)}
    check_keys(doc, set(fields), where)
    for key, val in doc.items():
        if str(fields[key].type).startswith("float") and val is not None and not _is_number(val):
            raise ConfigError(f"{where}.{key}: expected a number")
    kwargs = dict(doc)
    for key in ("gain_table", "components"):
        if key in kwargs:
            kwargs[key] = tuple(tuple(item) for item in kwargs[key])
    try:
        return cls(**kwargs)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{where}.{exc}") from exc


def _merge(base: dict, override: dict) -> dict:
    out = dict(base)
    for key, val in override.items():
        if isinstance(val, dict) and isinstance(out.get(key), dict):
            out[key] = {**out[key], **val}
        else:
            out[key] = val
    return out


def _vehicle(doc: dict, where: str) -> VehicleConfig:
    check_keys(doc, VEHICLE_KEYS, where)
    params = build_dataclass(AccParams, doc.get("params", {}), f"{where}.params")
    limits_doc = doc.get("limits", {})
    limits = None
    if limits_doc is not None:
        limits = build_dataclass(LimitModel, limits_doc, f"{where}.limits")
    pi = build_dataclass(PiGains, doc.get("pi", {}), f"{where}.pi")
    for key in ("v_init", "gap_init"):
        if doc.get(key) is not None and not _is_number(doc[key]):
            raise ConfigError(f"{where}.{key}: expected a number")
    return VehicleConfig(params=params, limits=limits, pi=pi,
                         actuation=doc.get("actuation", "pi"),
                         v_init=doc.get("v_init"), gap_init=doc.get("gap_init"))


def _mixed_overrides(doc: dict, n: int, seed: int) -> list[dict]:
    check_keys(doc, MIXED_KEYS, "mixed")
    raw = doc.get("ranges", {})
    if not isinstance(raw, dict) or any(not isinstance(v, list) or len(v) != 2
                                        for v in raw.values()):
        raise ConfigError("mixed.ranges: expected an object of [lo, hi] pairs")
    ranges = build_dataclass(ParameterRanges, {k: tuple(v) for k, v in raw.items()},
                             "mixed.ranges")
    draws = sample_mixed_platoon(seed, n, ranges, delta=doc.get("delta", 2.0),
                                 v_set=doc.get("v_set", 40.0), v_c=doc.get("v_c", 40.0))
    return [{"params": dataclasses.asdict(p), "limits": dataclasses.asdict(lim)}
            for p, lim in draws]


def scenario_from_dict(doc: Any) -> Scenario:
    """Build and validate a :class:`Scenario`; omitted fields take defaults."""
    check_keys(doc, SCENARIO_KEYS, "")
    if "lead" not in doc:
        raise ConfigError("lead: required")
    n = doc.get("n_vehicles")
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise ConfigError("n_vehicles: must be an integer >= 2")
    seed = doc.get("rng_seed", 0)
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise ConfigError("rng_seed: must be an integer")
    lead = build_dataclass(LeadProfile, doc["lead"], "lead")

    defaults = check_keys(doc.get("defaults", {}), VEHICLE_KEYS, "defaults")
    per_vehicle = doc.get("vehicles", [{}] * (n - 1))
    if not isinstance(per_vehicle, list) or len(per_vehicle) != n - 1:
        raise ConfigError(f"vehicles: expected {n - 1} entries (one per follower)")
    mixed = _mixed_overrides(doc["mixed"], n - 1, seed) if "mixed" in doc else [{}] * (n - 1)

    followers = []
    for i, (drawn, own) in enumerate(zip(mixed, per_vehicle), start=1):
        where = f"vehicles[{i}]"
        check_keys(own, VEHICLE_KEYS, where)
        followers.append(_vehicle(_merge(_merge(defaults, drawn), own), where))
    for key in ("dt", "horizon", "v_eq"):
        if doc.get(key) is not None and not _is_number(doc[key]):
            raise ConfigError(f"{key}: expected a number")
    try:
        return Scenario(followers=tuple(followers), lead=lead, dt=doc.get("dt", 0.1),
                        horizon=doc.get("horizon", 60.0), v_eq=doc.get("v_eq"),
                        rng_seed=seed, name=doc.get("name", ""))
    except ScenarioError as exc:
        raise ConfigError(str(exc)) from exc


def _vehicle_to_dict(cfg: VehicleConfig) -> dict:
    params = dataclasses.asdict(cfg.params)
    params["gain_table"] = [list(row) for row in cfg.params.gain_table]
    return {
        "params": params,
        "limits": None if cfg.limits is None else dataclasses.asdict(cfg.limits),
        "pi": dataclasses.asdict(cfg.pi),
        "actuation": cfg.actuation,
        "v_init": cfg.v_init,
        "gap_init": cfg.gap_init,
    }


def scenario_to_dict(scenario: Scenario) -> dict:
    """Fully explicit document; ``scenario_from_dict`` inverts it exactly."""
    lead = dataclasses.asdict(scenario.lead)
    lead["components"] = [list(c) for c in scenario.lead.components]
    return {
        "name": scenario.name,
        "n_vehicles": scenario.n_vehicles,
        "dt": scenario.dt,
        "horizon": scenario.horizon,
        "v_eq": scenario.v_eq,
        "rng_seed": scenario.rng_seed,
        "lead": lead,
        "vehicles": [_vehicle_to_dict(cfg) for cfg in scenario.followers],
    }


def load_json(path: str | Path) -> Any:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"config: cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config: malformed JSON at line {exc.lineno}: {exc.msg}") from exc


def parse_scenario(path: str | Path) -> Scenario:
    return scenario_from_dict(load_json(path))

"""JSON schemas for trajectories and scenarios, plus content hashing.

Schema version 1.  A trajectory literal is

    {"schema_version": 1,
     "segments": [{"start": 0.0, "form": "linear",
                   "params": {"intercept": 0.1, "slope": 0.05}}, ...],
     "maintenance_epochs": [{"time": 10.0, "post_hazard": 0.1}, ...]}

and a scenario file is

    {"schema_version": 1, "label": "figure1-sawtooth",
     "model": {"h0": 0.1, "growth": {"form": "linear", "params": {"slope": 0.05}}},
     "policy": {"kind": "periodic_perfect", "params": {"period": 10.0}},
     "horizon": 30.0}

Parsing is strict (SchemaError on anything off-schema) but does not run the
principle validator — the CLI's ``validate`` command needs to load
rule-breaking trajectories in order to report on them.
"""

from __future__ import annotations

import hashlib
import json
import math
from pathlib import Path

from .hazard import (
    Constant,
    ExponentialGrowth,
    HazardSegment,
    HazardTrajectory,
    Linear,
    MaintenanceEpoch,
    Power,
    SegmentForm,
)
from .scenarios import (
    DegradationModel,
    ExponentialRateGrowth,
    GrowthForm,
    LinearGrowth,
    MaintenancePolicy,
    PeriodicImperfect,
    PeriodicPerfect,
    PowerGrowth,
    Scenario,
    ThresholdPerfect,
)

__all__ = [
    "SCHEMA_VERSION",
    "SchemaError",
    "trajectory_to_dict",
    "trajectory_from_dict",
    "scenario_to_dict",
    "scenario_from_dict",
    "load_input",
    "dump_json",
    "trajectory_hash",
    "grid_hash",
]

SCHEMA_VERSION = 1


class SchemaError(ValueError):
    """Input JSON does not match the documented schema."""


_FORM_FIELDS: dict[str, tuple[type, tuple[str, ...]]] = {
    "constant": (Constant, ("level",)),
    "linear": (Linear, ("intercept", "slope")),
    "power": (Power, ("base", "coefficient", "exponent")),
    "exponential_growth": (ExponentialGrowth, ("base", "growth")),
}
_FORM_NAMES = {cls: name for name, (cls, _) in _FORM_FIELDS.items()}

_GROWTH_FIELDS: dict[str, tuple[type, tuple[str, ...]]] = {
    "linear": (LinearGrowth, ("slope",)),
    "power": (PowerGrowth, ("coefficient", "exponent")),
    "exponential_growth": (ExponentialRateGrowth, ("rate",)),
}
_GROWTH_NAMES = {cls: name for name, (cls, _) in _GROWTH_FIELDS.items()}

_POLICY_FIELDS: dict[str, tuple[type, tuple[str, ...]]] = {
    "periodic_perfect": (PeriodicPerfect, ("period",)),
    "periodic_imperfect": (PeriodicImperfect, ("period", "improvement")),
    "threshold_perfect": (ThresholdPerfect, ("trigger_hazard",)),
}
_POLICY_NAMES = {cls: name for name, (cls, _) in _POLICY_FIELDS.items()}


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise SchemaError(message)


def _number(obj, where: str) -> float:
    _require(isinstance(obj, (int, float)) and not isinstance(obj, bool), f"{where} must be a number")
    value = float(obj)
    _require(math.isfinite(value), f"{where} must be finite")
    return value


def _mapping(obj, where: str) -> dict:
    _require(isinstance(obj, dict), f"{where} must be an object")
    return obj


def _tagged(obj, where: str, tag_key: str, registry: dict) -> object:
    d = _mapping(obj, where)
    tag = d.get(tag_key)
    _require(tag in registry, f"{where}.{tag_key} must be one of {sorted(registry)}, got {tag!r}")
    cls, fields = registry[tag]
    params = _mapping(d.get("params"), f"{where}.params")
    _require(
        set(params) == set(fields),
        f"{where}.params for {tag!r} must have exactly keys {sorted(fields)}",
    )
    return cls(*(_number(params[f], f"{where}.params.{f}") for f in fields))


def _check_schema_version(d: dict, where: str) -> None:
    _require(
        d.get("schema_version") == SCHEMA_VERSION,
        f"{where}.schema_version must be {SCHEMA_VERSION}",
    )


# -- trajectories -----------------------------------------------------------


def _form_to_dict(form: SegmentForm) -> dict:
    name = _FORM_NAMES[type(form)]
    _, fields = _FORM_FIELDS[name]
    return {"form": name, "params": {f: getattr(form, f) for f in fields}}


def trajectory_to_dict(traj: HazardTrajectory) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "segments": [
            {"start": seg.start_time, **_form_to_dict(seg.form)} for seg in traj.segments
        ],
        "maintenance_epochs": [
            {"time": e.time, "post_hazard": e.post_hazard} for e in traj.maintenance_epochs
        ],
    }


def trajectory_from_dict(d) -> HazardTrajectory:
    d = _mapping(d, "trajectory")
    _check_schema_version(d, "trajectory")
    raw_segments = d.get("segments")
    _require(isinstance(raw_segments, list) and raw_segments, "trajectory.segments must be a nonempty array")
    segments = []
    for i, raw in enumerate(raw_segments):
        where = f"trajectory.segments[{i}]"
        seg = _mapping(raw, where)
        start = _number(seg.get("start"), f"{where}.start")
        form = _tagged(seg, where, "form", _FORM_FIELDS)
        segments.append(HazardSegment(start, form))
    raw_epochs = d.get("maintenance_epochs", [])
    _require(isinstance(raw_epochs, list), "trajectory.maintenance_epochs must be an array")
    epochs = []
    for i, raw in enumerate(raw_epochs):
        where = f"trajectory.maintenance_epochs[{i}]"
        e = _mapping(raw, where)
        epochs.append(
            MaintenanceEpoch(
                _number(e.get("time"), f"{where}.time"),
                _number(e.get("post_hazard"), f"{where}.post_hazard"),
            )
        )
    return HazardTrajectory(tuple(segments), tuple(epochs))


# -- scenarios ---------------------------------------------------------------


def scenario_to_dict(scenario: Scenario) -> dict:
    growth = scenario.model.growth
    growth_name = _GROWTH_NAMES[type(growth)]
    _, growth_fields = _GROWTH_FIELDS[growth_name]
    policy = scenario.policy
    policy_name = _POLICY_NAMES[type(policy)]
    _, policy_fields = _POLICY_FIELDS[policy_name]
    return {
        "schema_version": SCHEMA_VERSION,
        "label": scenario.label,
        "model": {
            "h0": scenario.model.initial_hazard,
            "growth": {
                "form": growth_name,
                "params": {f: getattr(growth, f) for f in growth_fields},
            },
        },
        "policy": {
            "kind": policy_name,
            "params": {f: getattr(policy, f) for f in policy_fields},
        },
        "horizon": scenario.horizon,
    }


def scenario_from_dict(d) -> Scenario:
    d = _mapping(d, "scenario")
    _check_schema_version(d, "scenario")
    label = d.get("label")
    _require(isinstance(label, str) and label, "scenario.label must be a nonempty string")
    model = _mapping(d.get("model"), "scenario.model")
    h0 = _number(model.get("h0"), "scenario.model.h0")
    growth: GrowthForm = _tagged(model.get("growth"), "scenario.model.growth", "form", _GROWTH_FIELDS)
    policy: MaintenancePolicy = _tagged(d.get("policy"), "scenario.policy", "kind", _POLICY_FIELDS)
    horizon = _number(d.get("horizon"), "scenario.horizon")
    return Scenario(label=label, model=DegradationModel(h0, growth), policy=policy, horizon=horizon)


# -- files and hashing --------------------------------------------------------


def load_input(path: str | Path) -> tuple[str, HazardTrajectory | Scenario]:
    """Load a trajectory or scenario JSON file, sniffed by its keys.

    Returns ("trajectory", HazardTrajectory) or ("scenario", Scenario).
    """
    path = Path(path)
    try:
        with open(path) as fh:
            d = json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc}") from exc
    if isinstance(d, dict) and "segments" in d:
        return "trajectory", trajectory_from_dict(d)
    if isinstance(d, dict) and "model" in d:
        return "scenario", scenario_from_dict(d)
    raise SchemaError(f"{path} is neither a trajectory (segments) nor a scenario (model)")


def dump_json(path: str | Path, obj: dict) -> Path:
    """Write canonical JSON (sorted keys, trailing newline)."""
    path = Path(path)
    with open(path, "w", newline="\n") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return path


def _canonical_json(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def trajectory_hash(traj: HazardTrajectory) -> str:
    """sha256 of the canonical trajectory JSON; stable across round trips
    because floats serialize via their shortest lossless repr."""
    return hashlib.sha256(_canonical_json(trajectory_to_dict(traj)).encode()).hexdigest()


def grid_hash(grid) -> str:
    """sha256 of a time grid, for provenance in distance reports."""
    payload = _canonical_json({"grid": [float(t) for t in grid]})
    return hashlib.sha256(payload.encode()).hexdigest()

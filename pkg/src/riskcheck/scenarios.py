"""Compile degradation models and maintenance policies into trajectories.

A scenario pairs a within-cycle degradation law (how fast the hazard grows
since the last restoration) with a maintenance policy (when restoration
happens and how complete it is) over a planning horizon.  The compiler
emits sawtooth-shaped trajectories: hazard growth between epochs, a drop at
each epoch, and the final cycle's growth law extending to infinity.

Perfect maintenance restores the hazard to its time-zero value h0.
Imperfect maintenance removes a fraction ``improvement`` of the excess over
h0: post = h0 + (1 - improvement) * (pre - h0), which keeps every
restoration strictly below the pre-repair hazard and at or above h0 for any
improvement in (0, 1].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .hazard import (
    Constant,
    ExponentialGrowth,
    HazardSegment,
    HazardTrajectory,
    Linear,
    MaintenanceEpoch,
    Power,
    SegmentForm,
    ensure_valid,
)

__all__ = [
    "LinearGrowth",
    "PowerGrowth",
    "ExponentialRateGrowth",
    "DegradationModel",
    "PeriodicPerfect",
    "PeriodicImperfect",
    "ThresholdPerfect",
    "MaintenancePolicy",
    "Scenario",
    "build_trajectory",
    "scenario_catalog",
]


@dataclass(frozen=True)
class LinearGrowth:
    """Hazard increases by ``slope`` per unit time within a cycle."""

    slope: float


@dataclass(frozen=True)
class PowerGrowth:
    """Hazard increase ``coefficient * u**exponent`` within a cycle."""

    coefficient: float
    exponent: float


@dataclass(frozen=True)
class ExponentialRateGrowth:
    """Hazard grows by factor exp(rate * u) within a cycle."""

    rate: float


GrowthForm = LinearGrowth | PowerGrowth | ExponentialRateGrowth


@dataclass(frozen=True)
class DegradationModel:
    initial_hazard: float
    growth: GrowthForm


@dataclass(frozen=True)
class PeriodicPerfect:
    period: float


@dataclass(frozen=True)
class PeriodicImperfect:
    period: float
    improvement: float


@dataclass(frozen=True)
class ThresholdPerfect:
    trigger_hazard: float


MaintenancePolicy = PeriodicPerfect | PeriodicImperfect | ThresholdPerfect


@dataclass(frozen=True)
class Scenario:
    label: str
    model: DegradationModel
    policy: MaintenancePolicy
    horizon: float


def _check_scenario(scenario: Scenario) -> None:
    model, policy = scenario.model, scenario.policy
    if not (model.initial_hazard > 0.0 and math.isfinite(model.initial_hazard)):
        raise ValueError(f"initial hazard must be positive and finite, got {model.initial_hazard!r}")
    growth = model.growth
    if isinstance(growth, LinearGrowth):
        ok = growth.slope >= 0.0 and math.isfinite(growth.slope)
    elif isinstance(growth, PowerGrowth):
        ok = (
            growth.coefficient >= 0.0
            and growth.exponent >= 1.0
            and math.isfinite(growth.coefficient)
            and math.isfinite(growth.exponent)
        )
    elif isinstance(growth, ExponentialRateGrowth):
        ok = growth.rate >= 0.0 and math.isfinite(growth.rate)
    else:
        raise ValueError(f"unknown growth form {type(growth).__name__}")
    if not ok:
        raise ValueError(f"growth parameters out of range: {growth!r}")
    if isinstance(policy, (PeriodicPerfect, PeriodicImperfect)):
        if not (policy.period > 0.0 and math.isfinite(policy.period)):
            raise ValueError(f"maintenance period must be positive, got {policy.period!r}")
        if isinstance(policy, PeriodicImperfect) and not (0.0 < policy.improvement <= 1.0):
            raise ValueError(
                f"improvement must lie in (0, 1], got {policy.improvement!r}"
            )
    elif isinstance(policy, ThresholdPerfect):
        if not (policy.trigger_hazard > model.initial_hazard and math.isfinite(policy.trigger_hazard)):
            raise ValueError(
                f"trigger hazard {policy.trigger_hazard!r} must exceed the initial hazard "
                f"{model.initial_hazard!r}"
            )
    else:
        raise ValueError(f"unknown maintenance policy {type(policy).__name__}")
    if not (scenario.horizon > 0.0 and math.isfinite(scenario.horizon)):
        raise ValueError(f"horizon must be positive and finite, got {scenario.horizon!r}")


def _cycle_form(growth: GrowthForm, base: float) -> SegmentForm:
    """Segment form for one cycle starting at hazard ``base``."""
    if isinstance(growth, LinearGrowth):
        return Constant(base) if growth.slope == 0.0 else Linear(base, growth.slope)
    if isinstance(growth, PowerGrowth):
        if growth.coefficient == 0.0:
            return Constant(base)
        return Power(base, growth.coefficient, growth.exponent)
    return Constant(base) if growth.rate == 0.0 else ExponentialGrowth(base, growth.rate)


def _threshold_crossing(growth: GrowthForm, base: float, trigger: float) -> float | None:
    """Elapsed cycle time at which the hazard reaches ``trigger``; None if
    the growth never gets there."""
    if isinstance(growth, LinearGrowth):
        if growth.slope == 0.0:
            return None
        return (trigger - base) / growth.slope
    if isinstance(growth, PowerGrowth):
        if growth.coefficient == 0.0:
            return None
        return ((trigger - base) / growth.coefficient) ** (1.0 / growth.exponent)
    if growth.rate == 0.0:
        return None
    return math.log(trigger / base) / growth.rate


def build_trajectory(scenario: Scenario) -> HazardTrajectory:
    """Compile a scenario into a validated trajectory.

    Maintenance is instantaneous.  Epochs land at policy-determined times up
    to and including the horizon; an epoch that would not strictly decrease
    the hazard (no degradation happened) is skipped rather than declared.
    Past the last epoch the cycle's growth law extends to infinity.
    """
    _check_scenario(scenario)
    model, policy, horizon = scenario.model, scenario.policy, scenario.horizon
    h0 = model.initial_hazard

    segments: list[HazardSegment] = []
    epochs: list[MaintenanceEpoch] = []
    cycle_start = 0.0
    form = _cycle_form(model.growth, h0)

    if isinstance(policy, (PeriodicPerfect, PeriodicImperfect)):
        period = policy.period
        improvement = policy.improvement if isinstance(policy, PeriodicImperfect) else 1.0
        k = 1
        while k * period <= horizon:
            candidate = k * period
            k += 1
            left = form.value(candidate - cycle_start)
            post = h0 + (1.0 - improvement) * (left - h0)
            if not post < left:
                continue  # nothing degraded; a no-op is not a maintenance
            segments.append(HazardSegment(cycle_start, form))
            epochs.append(MaintenanceEpoch(candidate, post))
            cycle_start = candidate
            form = _cycle_form(model.growth, post)
    else:
        step = _threshold_crossing(model.growth, h0, policy.trigger_hazard)
        if step is not None:
            candidate = step
            while candidate <= horizon:
                segments.append(HazardSegment(cycle_start, form))
                epochs.append(MaintenanceEpoch(candidate, h0))
                cycle_start = candidate
                form = _cycle_form(model.growth, h0)
                candidate = cycle_start + step

    segments.append(HazardSegment(cycle_start, form))
    return ensure_valid(HazardTrajectory(tuple(segments), tuple(epochs)))


def scenario_catalog() -> tuple[Scenario, ...]:
    """Built-in demonstration scenarios.

    The first four are the canonical quartet (constant-hazard control,
    unmaintained degradation, periodic sawtooth, imperfect-maintenance
    drift); the fifth exercises threshold-triggered maintenance on a
    power-law degradation.
    """
    return (
        Scenario(
            label="constant-control",
            model=DegradationModel(0.5, LinearGrowth(0.0)),
            policy=PeriodicPerfect(10.0),
            horizon=30.0,
        ),
        Scenario(
            label="unmaintained-linear",
            model=DegradationModel(0.1, LinearGrowth(0.05)),
            policy=PeriodicPerfect(60.0),  # scheduled beyond the horizon
            horizon=30.0,
        ),
        Scenario(
            label="figure1-sawtooth",
            model=DegradationModel(0.1, LinearGrowth(0.05)),
            policy=PeriodicPerfect(10.0),
            horizon=30.0,
        ),
        Scenario(
            label="imperfect-drift",
            model=DegradationModel(0.1, LinearGrowth(0.05)),
            policy=PeriodicImperfect(10.0, 0.5),
            horizon=40.0,
        ),
        Scenario(
            label="threshold-power",
            model=DegradationModel(0.2, PowerGrowth(0.02, 2.0)),
            policy=ThresholdPerfect(0.7),
            horizon=20.0,
        ),
    )

"""Piecewise hazard trajectories for maintained systems.

A trajectory is a sequence of parametric segments covering [0, inf), each
non-decreasing, with declared maintenance epochs at the (only) points where
the hazard is allowed to drop.  Five structural rules are enforced by
:func:`validate_trajectory`:

1. the hazard is positive and finite everywhere;
2. the hazard is right-continuous (declared post-maintenance values must
   match the following segment);
3. the hazard is non-decreasing except at maintenance epochs;
4. every strict decrease happens at a declared maintenance epoch, and a
   declared epoch must strictly decrease the hazard;
5. the time-zero hazard is the global infimum (restoration never improves
   the system beyond good-as-new).

Cumulative hazard, reliability R(t) = exp(-int_0^t h) and the failure CDF
are evaluated from exact per-segment antiderivatives; no quadrature is
involved outside :func:`mean_time_to_failure`.

All types are immutable after construction and all operations are pure, so
everything here is safe to share across threads.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache

from scipy import integrate

__all__ = [
    "Constant",
    "Linear",
    "Power",
    "ExponentialGrowth",
    "HazardSegment",
    "MaintenanceEpoch",
    "HazardTrajectory",
    "Violation",
    "ValidationReport",
    "TrajectoryStructureError",
    "PrincipleViolationError",
    "validate_trajectory",
    "ensure_valid",
    "hazard_at",
    "cumulative_hazard",
    "reliability",
    "failure_cdf",
    "recovered_hazard",
    "mean_time_to_failure",
    "invert_cumulative_hazard",
    "MTTF_CUTOFF_CUMULATIVE_HAZARD",
]

# Cumulative hazard beyond which the survival probability drops under 1e-12;
# mean_time_to_failure switches from quadrature to the tail estimate there.
MTTF_CUTOFF_CUMULATIVE_HAZARD = 27.6

_INVERSION_TIME_TOLERANCE = 1e-12
_NEWTON_MAX_ITERATIONS = 50


class TrajectoryStructureError(ValueError):
    """Candidate trajectory is malformed (ordering, coverage, non-finite
    fields) — distinct from a principle violation, which is reported in a
    :class:`ValidationReport` instead of raised."""


class PrincipleViolationError(ValueError):
    """An operation required a valid trajectory but got one that fails
    validation; carries the offending report."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        lines = "; ".join(
            f"principle {v.principle} at t={v.location:g}: {v.message}"
            for v in report.violations
        )
        super().__init__(f"trajectory violates the hazard principles: {lines}")


# ---------------------------------------------------------------------------
# Segment forms.  Each knows its value, exact antiderivative, and (where one
# exists) the closed-form inverse of the antiderivative, all in elapsed time
# u = t - segment start.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Constant:
    """Flat hazard ``level``."""

    level: float

    def __post_init__(self):
        object.__setattr__(self, "level", float(self.level))

    def value(self, u: float) -> float:
        return self.level

    def integral(self, u: float) -> float:
        return self.level * u

    def invert_integral(self, area: float) -> float | None:
        return area / self.level


@dataclass(frozen=True)
class Linear:
    """Hazard ``intercept + slope * u``."""

    intercept: float
    slope: float

    def __post_init__(self):
        object.__setattr__(self, "intercept", float(self.intercept))
        object.__setattr__(self, "slope", float(self.slope))

    def value(self, u: float) -> float:
        return self.intercept + self.slope * u

    def integral(self, u: float) -> float:
        return u * (self.intercept + 0.5 * self.slope * u)

    def invert_integral(self, area: float) -> float | None:
        if self.slope == 0.0:
            return area / self.intercept
        # Stable root of slope/2 u^2 + intercept u - area = 0.
        disc = self.intercept * self.intercept + 2.0 * self.slope * area
        return 2.0 * area / (self.intercept + math.sqrt(disc))


@dataclass(frozen=True)
class Power:
    """Hazard ``base + coefficient * u**exponent``."""

    base: float
    coefficient: float
    exponent: float

    def __post_init__(self):
        object.__setattr__(self, "base", float(self.base))
        object.__setattr__(self, "coefficient", float(self.coefficient))
        object.__setattr__(self, "exponent", float(self.exponent))

    def value(self, u: float) -> float:
        if u == 0.0:
            # Right limit at the segment start; u**e is singular for e <= 0.
            if self.exponent > 0.0 or self.coefficient == 0.0:
                return self.base
            if self.exponent == 0.0:
                return self.base + self.coefficient
            return math.inf if self.coefficient > 0.0 else -math.inf
        return self.base + self.coefficient * u**self.exponent

    def integral(self, u: float) -> float:
        if self.coefficient == 0.0:
            return self.base * u
        return self.base * u + self.coefficient * u ** (self.exponent + 1.0) / (
            self.exponent + 1.0
        )

    def invert_integral(self, area: float) -> float | None:
        if self.coefficient == 0.0:
            return area / self.base
        if self.base == 0.0:
            return ((self.exponent + 1.0) * area / self.coefficient) ** (
                1.0 / (self.exponent + 1.0)
            )
        return None  # no closed form; caller falls back to root finding


@dataclass(frozen=True)
class ExponentialGrowth:
    """Hazard ``base * exp(growth * u)``."""

    base: float
    growth: float

    def __post_init__(self):
        object.__setattr__(self, "base", float(self.base))
        object.__setattr__(self, "growth", float(self.growth))

    def value(self, u: float) -> float:
        return self.base * math.exp(self.growth * u)

    def integral(self, u: float) -> float:
        if self.growth == 0.0:
            return self.base * u
        return self.base * math.expm1(self.growth * u) / self.growth

    def invert_integral(self, area: float) -> float | None:
        if self.growth == 0.0:
            return area / self.base
        return math.log1p(self.growth * area / self.base) / self.growth


SegmentForm = Constant | Linear | Power | ExponentialGrowth


def _form_params(form: SegmentForm) -> tuple[float, ...]:
    if isinstance(form, Constant):
        return (form.level,)
    if isinstance(form, Linear):
        return (form.intercept, form.slope)
    if isinstance(form, Power):
        return (form.base, form.coefficient, form.exponent)
    if isinstance(form, ExponentialGrowth):
        return (form.base, form.growth)
    raise TypeError(f"unknown segment form {type(form).__name__}")


def _limit_at_infinity(form: SegmentForm) -> float:
    """Limit of the form's value as elapsed time grows without bound."""
    if isinstance(form, Constant):
        return form.level
    if isinstance(form, Linear):
        if form.slope == 0.0:
            return form.intercept
        return math.inf if form.slope > 0.0 else -math.inf
    if isinstance(form, Power):
        if form.coefficient == 0.0 or form.exponent < 0.0:
            return form.base
        if form.exponent == 0.0:
            return form.base + form.coefficient
        return math.inf if form.coefficient > 0.0 else -math.inf
    if form.growth == 0.0:
        return form.base
    return math.inf if form.growth > 0.0 else 0.0


def _positivity_crossing(form: SegmentForm) -> float | None:
    """Elapsed time at which a decreasing form first reaches zero, if ever."""
    if isinstance(form, Linear) and form.slope < 0.0 < form.intercept:
        return form.intercept / -form.slope
    if isinstance(form, Power) and form.coefficient < 0.0 < form.base and form.exponent > 0.0:
        return (form.base / -form.coefficient) ** (1.0 / form.exponent)
    return None


# ---------------------------------------------------------------------------
# Trajectory types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HazardSegment:
    """One piece of the trajectory, valid from ``start_time`` until the next
    segment begins (the last segment extends to infinity)."""

    start_time: float
    form: SegmentForm

    def __post_init__(self):
        object.__setattr__(self, "start_time", float(self.start_time))


@dataclass(frozen=True)
class MaintenanceEpoch:
    """Declared restorative action: the hazard drops to ``post_hazard`` at
    ``time``, which must coincide with a segment boundary."""

    time: float
    post_hazard: float

    def __post_init__(self):
        object.__setattr__(self, "time", float(self.time))
        object.__setattr__(self, "post_hazard", float(self.post_hazard))


@dataclass(frozen=True)
class HazardTrajectory:
    """Piecewise hazard h(t) on [0, inf) with declared maintenance epochs.

    Construction is deliberately permissive — candidates that break the
    hazard principles can be built so that
    :func:`validate_trajectory` has something to report.  Builders that
    promise validity (the scenario compiler, the JSON round trip in the CLI)
    call :func:`ensure_valid` after construction.
    """

    segments: tuple[HazardSegment, ...]
    maintenance_epochs: tuple[MaintenanceEpoch, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "segments", tuple(self.segments))
        object.__setattr__(self, "maintenance_epochs", tuple(self.maintenance_epochs))


@dataclass(frozen=True)
class Violation:
    principle: int
    location: float
    message: str


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of checking the five principles; ``valid`` iff no violations.

    ``notes`` carries informational flags that are not violations — currently
    only upward hazard jumps (shocks), which the principles permit.
    """

    valid: bool
    violations: tuple[Violation, ...]
    notes: tuple[str, ...] = ()


# ---------------------------------------------------------------------------
# Structure and validation
# ---------------------------------------------------------------------------


def _check_structure(traj: HazardTrajectory) -> None:
    if not isinstance(traj, HazardTrajectory):
        raise TrajectoryStructureError(f"expected HazardTrajectory, got {type(traj).__name__}")
    if len(traj.segments) < 1:
        raise TrajectoryStructureError("trajectory needs at least one segment")
    starts = [seg.start_time for seg in traj.segments]
    for seg in traj.segments:
        if not math.isfinite(seg.start_time):
            raise TrajectoryStructureError("segment start times must be finite")
        if not all(math.isfinite(p) for p in _form_params(seg.form)):
            raise TrajectoryStructureError("segment parameters must be finite")
    if starts[0] != 0.0:
        raise TrajectoryStructureError(f"first segment must start at 0, got {starts[0]!r}")
    for a, b in zip(starts, starts[1:]):
        if not b > a:
            raise TrajectoryStructureError(
                f"segment start times must be strictly increasing ({a!r} then {b!r})"
            )
    boundary_set = set(starts[1:])
    prev_time = 0.0
    for epoch in traj.maintenance_epochs:
        if not (math.isfinite(epoch.time) and math.isfinite(epoch.post_hazard)):
            raise TrajectoryStructureError("maintenance epoch fields must be finite")
        if epoch.time <= prev_time:
            raise TrajectoryStructureError(
                "maintenance epochs must be strictly increasing and positive"
            )
        if epoch.time not in boundary_set:
            raise TrajectoryStructureError(
                f"maintenance epoch at t={epoch.time!r} does not coincide with a segment boundary"
            )
        prev_time = epoch.time


def validate_trajectory(traj: HazardTrajectory) -> ValidationReport:
    """Check a candidate trajectory against the five hazard principles.

    Returns a report listing every detected violation, ordered by location;
    ``valid`` is true iff the list is empty.  Upward jumps at boundaries are
    permitted (they model shocks) and show up in ``notes`` only.

    Raises :class:`TrajectoryStructureError` for structurally malformed
    candidates (unordered or overlapping segments, epochs off-boundary,
    duplicate epochs, non-finite fields) — those are not principle
    violations, the candidate simply does not describe a trajectory.
    """
    _check_structure(traj)
    segments = traj.segments
    n = len(segments)
    starts = [seg.start_time for seg in segments]
    violations: list[Violation] = []
    notes: list[str] = []

    h0 = segments[0].form.value(0.0)
    epoch_at = {epoch.time: epoch for epoch in traj.maintenance_epochs}

    for i, seg in enumerate(segments):
        start = starts[i]
        length = (starts[i + 1] - start) if i + 1 < n else math.inf
        v0 = seg.form.value(0.0)
        end_value = (
            seg.form.value(length) if math.isfinite(length) else _limit_at_infinity(seg.form)
        )

        # Principle 1: positive and finite on the whole span.
        if not (v0 > 0.0 and math.isfinite(v0)):
            violations.append(
                Violation(1, start, f"hazard at segment start is {v0!r}, must be positive and finite")
            )
        elif end_value < 0.0:
            # A decaying exponential only approaches zero and stays legal;
            # anything whose (limit) value goes negative crosses zero first.
            crossing = _positivity_crossing(seg.form)
            where = start + crossing if crossing is not None else start
            violations.append(
                Violation(1, where, "hazard reaches zero inside the segment")
            )
        elif math.isfinite(length) and not math.isfinite(end_value):
            violations.append(
                Violation(1, start + length, "hazard overflows to a non-finite value inside the segment")
            )

        # Principle 3: per-form sufficient conditions for non-decrease.
        p3_message = None
        if isinstance(seg.form, Linear) and seg.form.slope < 0.0:
            p3_message = f"negative slope {seg.form.slope:g}"
        elif isinstance(seg.form, Power):
            if seg.form.coefficient < 0.0:
                p3_message = f"negative coefficient {seg.form.coefficient:g}"
            elif seg.form.coefficient > 0.0 and seg.form.exponent < 1.0:
                p3_message = f"exponent {seg.form.exponent:g} below 1"
        elif isinstance(seg.form, ExponentialGrowth) and seg.form.growth < 0.0:
            p3_message = f"negative growth {seg.form.growth:g}"
        if p3_message is not None:
            violations.append(
                Violation(3, start, f"segment decreases within its span ({p3_message})")
            )

        # Principle 5: no segment may dip below the time-zero hazard.
        # For the first segment v0 == h(0), so this reduces to its end value.
        if min(v0, end_value) < h0:
            violations.append(
                Violation(5, start, f"segment hazard falls below h(0)={h0:g}")
            )

    for i in range(1, n):
        boundary = starts[i]
        prev = segments[i - 1]
        prev_left = prev.form.value(boundary - prev.start_time)
        next_v0 = segments[i].form.value(0.0)
        epoch = epoch_at.get(boundary)
        if epoch is None:
            if next_v0 < prev_left:
                violations.append(
                    Violation(
                        4,
                        boundary,
                        f"hazard drops {prev_left:g} -> {next_v0:g} without a declared maintenance epoch",
                    )
                )
            elif next_v0 > prev_left:
                notes.append(
                    f"upward jump {prev_left:g} -> {next_v0:g} at t={boundary:g} (shock; permitted)"
                )
        else:
            if epoch.post_hazard != next_v0:
                violations.append(
                    Violation(
                        2,
                        boundary,
                        f"declared post-maintenance hazard {epoch.post_hazard:g} does not match "
                        f"the right-limit {next_v0:g} of the following segment",
                    )
                )
            if not epoch.post_hazard < prev_left:
                violations.append(
                    Violation(
                        4,
                        boundary,
                        f"declared maintenance does not strictly decrease the hazard "
                        f"({prev_left:g} -> {epoch.post_hazard:g})",
                    )
                )
            if epoch.post_hazard < h0:
                violations.append(
                    Violation(
                        5,
                        boundary,
                        f"post-maintenance hazard {epoch.post_hazard:g} below h(0)={h0:g}",
                    )
                )

    violations.sort(key=lambda v: (v.location, v.principle))
    return ValidationReport(valid=not violations, violations=tuple(violations), notes=tuple(notes))


def ensure_valid(traj: HazardTrajectory) -> HazardTrajectory:
    """Return ``traj`` unchanged, raising :class:`PrincipleViolationError`
    if it fails :func:`validate_trajectory`."""
    report = validate_trajectory(traj)
    if not report.valid:
        raise PrincipleViolationError(report)
    return traj


# ---------------------------------------------------------------------------
# Hazard calculus.  Preconditions: trajectory valid (not rechecked here).
# ---------------------------------------------------------------------------


@lru_cache(maxsize=512)
def _profile(traj: HazardTrajectory) -> tuple[tuple[float, ...], tuple[float, ...]]:
    """Segment start times and cumulative hazard at each start."""
    starts = tuple(seg.start_time for seg in traj.segments)
    prefix = [0.0]
    for seg, nxt in zip(traj.segments, starts[1:]):
        prefix.append(prefix[-1] + seg.form.integral(nxt - seg.start_time))
    return starts, tuple(prefix)


def _require_nonnegative_time(t: float) -> float:
    t = float(t)
    if not (t >= 0.0 and math.isfinite(t)):
        raise ValueError(f"time must be finite and nonnegative, got {t!r}")
    return t


def hazard_at(traj: HazardTrajectory, t: float) -> float:
    """Right-continuous hazard value h(t); at a boundary this is the value
    of the incoming segment."""
    t = _require_nonnegative_time(t)
    starts, _ = _profile(traj)
    i = bisect_right(starts, t) - 1
    seg = traj.segments[i]
    return seg.form.value(t - seg.start_time)


def cumulative_hazard(traj: HazardTrajectory, t: float) -> float:
    """Integral of the hazard over [0, t], from exact per-segment
    antiderivatives."""
    t = _require_nonnegative_time(t)
    starts, prefix = _profile(traj)
    i = bisect_right(starts, t) - 1
    seg = traj.segments[i]
    return prefix[i] + seg.form.integral(t - seg.start_time)


def reliability(traj: HazardTrajectory, t: float) -> float:
    """Survival probability R(t) = exp(-cumulative_hazard(t))."""
    return math.exp(-cumulative_hazard(traj, t))


def failure_cdf(traj: HazardTrajectory, t: float) -> float:
    """Probability of failure by time t, 1 - R(t)."""
    return -math.expm1(-cumulative_hazard(traj, t))


def invert_cumulative_hazard(traj: HazardTrajectory, target: float) -> float:
    """First time t with cumulative hazard equal to ``target``.

    Solved per segment: in closed form where the antiderivative inverts,
    otherwise by bracketed bisection with Newton polish to absolute time
    tolerance 1e-12.  Positivity of the hazard guarantees a finite root for
    every target >= 0.
    """
    target = float(target)
    if not (target >= 0.0 and math.isfinite(target)):
        raise ValueError(f"target cumulative hazard must be finite and nonnegative, got {target!r}")
    starts, prefix = _profile(traj)
    i = bisect_right(prefix, target) - 1
    seg = traj.segments[i]
    remainder = target - prefix[i]
    length = (starts[i + 1] - starts[i]) if i + 1 < len(starts) else math.inf
    u = seg.form.invert_integral(remainder)
    if u is None:
        u = _invert_integral_numeric(seg.form, remainder, length)
    elif math.isfinite(length):
        u = min(u, length)  # guard rounding past the boundary
    return seg.start_time + u


def _invert_integral_numeric(form: SegmentForm, area: float, span: float) -> float:
    """Root of form.integral(u) = area on [0, span] by safeguarded Newton."""
    if area == 0.0:
        return 0.0
    lo = 0.0
    if math.isfinite(span):
        hi = span
    else:
        hi = 1.0
        while form.integral(hi) < area:
            hi *= 2.0
    u = 0.5 * (lo + hi)
    for _ in range(_NEWTON_MAX_ITERATIONS):
        f = form.integral(u) - area
        if f > 0.0:
            hi = u
        elif f < 0.0:
            lo = u
        else:
            return u
        slope = form.value(u)
        step = f / slope if slope > 0.0 else math.nan
        candidate = u - step
        if not (lo < candidate < hi):
            candidate = 0.5 * (lo + hi)
        if abs(candidate - u) <= _INVERSION_TIME_TOLERANCE:
            return candidate
        u = candidate
    # Newton did not settle; finish with plain bisection.
    while hi - lo > _INVERSION_TIME_TOLERANCE:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if form.integral(mid) - area > 0.0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def recovered_hazard(traj: HazardTrajectory, t: float, dt: float = 1e-4) -> float:
    """Hazard recovered from the survival curve as -R'(t)/R(t) by central
    finite differences.

    This exists purely as a numerical consistency check against
    :func:`hazard_at`; away from segment boundaries the two agree to
    O(dt^2).  Requests within ``dt`` of a segment boundary (where R is not
    smooth) or closer than ``dt`` to time zero are refused.
    """
    t = _require_nonnegative_time(t)
    dt = float(dt)
    if not (dt > 0.0 and math.isfinite(dt)):
        raise ValueError(f"dt must be positive and finite, got {dt!r}")
    if t < dt:
        raise ValueError(f"t={t:g} is within dt={dt:g} of time zero; cannot center the difference")
    starts, _ = _profile(traj)
    for boundary in starts[1:]:
        if abs(t - boundary) <= dt:
            raise ValueError(
                f"t={t:g} is within dt={dt:g} of the segment boundary at {boundary:g}; "
                f"the finite-difference check is not meaningful across a discontinuity"
            )
    r_minus = reliability(traj, t - dt)
    r_center = reliability(traj, t)
    r_plus = reliability(traj, t + dt)
    if r_center <= 0.0:
        raise ValueError(f"reliability underflowed to zero at t={t:g}")
    return (r_minus - r_plus) / (2.0 * dt * r_center)


def mean_time_to_failure(traj: HazardTrajectory) -> float:
    """Mean of the failure time, int_0^inf R(t) dt.

    Adaptive quadrature (piecewise between segment boundaries, where R is
    smooth) up to the later of the last segment start and the first time the
    cumulative hazard reaches ``MTTF_CUTOFF_CUMULATIVE_HAZARD``; past that
    point the tail is R(t)/h for a constant final segment, else quadrature
    continues in growing windows until an increment falls below 1e-12.
    """
    starts, _ = _profile(traj)
    t_cut = max(invert_cumulative_hazard(traj, MTTF_CUTOFF_CUMULATIVE_HAZARD), starts[-1])

    def survival(t: float) -> float:
        return math.exp(-cumulative_hazard(traj, t))

    total = 0.0
    knots = [s for s in starts if s < t_cut] + [t_cut]
    for a, b in zip(knots, knots[1:]):
        part, _err = integrate.quad(survival, a, b, epsabs=1e-13, epsrel=1e-11, limit=200)
        total += part

    last = traj.segments[-1].form
    if isinstance(last, Constant):
        total += survival(t_cut) / last.level
    else:
        width = 1.0 / hazard_at(traj, t_cut)
        a = t_cut
        for _ in range(200):
            part, _err = integrate.quad(survival, a, a + width, epsabs=1e-13, epsrel=1e-11, limit=200)
            total += part
            a += width
            width *= 2.0
            if part < 1e-12:
                break
    return total

"""Hazard calculus: evaluation, integration, inversion, recovery, MTTF."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import quad_cumulative_hazard, quad_mttf
from riskcheck.hazard import (
    Constant,
    ExponentialGrowth,
    HazardSegment,
    HazardTrajectory,
    Linear,
    MaintenanceEpoch,
    Power,
    cumulative_hazard,
    failure_cdf,
    hazard_at,
    invert_cumulative_hazard,
    mean_time_to_failure,
    recovered_hazard,
    reliability,
)
from trajgen import random_valid_trajectory

CONSTANT_HALF = HazardTrajectory((HazardSegment(0.0, Constant(0.5)),))
LINEAR_1_2 = HazardTrajectory((HazardSegment(0.0, Linear(1.0, 2.0)),))
WEIBULL_SHAPE = HazardTrajectory((HazardSegment(0.0, Linear(0.0, 2.0)),))  # h(t) = 2t

# Linear rise 0.1 + 0.05 t on [0, 10), maintenance at t=10 down to a flat 0.3.
SAWTOOTH_STEP = HazardTrajectory(
    (
        HazardSegment(0.0, Linear(0.1, 0.05)),
        HazardSegment(10.0, Constant(0.3)),
    ),
    (MaintenanceEpoch(10.0, 0.3),),
)


class TestHazardAt:
    def test_constant(self):
        assert hazard_at(CONSTANT_HALF, 7.0) == 0.5

    def test_linear(self):
        assert hazard_at(LINEAR_1_2, 1.5) == 4.0

    def test_right_continuous_at_maintenance(self):
        assert hazard_at(SAWTOOTH_STEP, 10.0) == 0.3
        assert hazard_at(SAWTOOTH_STEP, 9.999) == pytest.approx(0.1 + 0.05 * 9.999, abs=1e-12)

    def test_negative_time_rejected(self):
        with pytest.raises(ValueError):
            hazard_at(CONSTANT_HALF, -0.1)


class TestCumulativeHazard:
    def test_constant(self):
        assert cumulative_hazard(CONSTANT_HALF, 2.0) == 1.0

    def test_zero_at_origin(self):
        assert cumulative_hazard(SAWTOOTH_STEP, 0.0) == 0.0
        assert cumulative_hazard(LINEAR_1_2, 0.0) == 0.0

    def test_linear_against_quadrature(self):
        # independent oracle gives 3.75 for intercept 1, slope 2 at t=1.5
        oracle = quad_cumulative_hazard(LINEAR_1_2, 1.5)
        assert oracle == pytest.approx(3.75, rel=1e-10)
        assert cumulative_hazard(LINEAR_1_2, 1.5) == pytest.approx(oracle, rel=1e-10)

    def test_across_maintenance_against_quadrature(self):
        value = cumulative_hazard(SAWTOOTH_STEP, 17.0)
        assert value == pytest.approx(quad_cumulative_hazard(SAWTOOTH_STEP, 17.0), rel=1e-10)

    def test_randomized_against_quadrature(self):
        rng = np.random.default_rng(20231)
        for _ in range(100):
            traj = random_valid_trajectory(rng)
            t = float(rng.uniform(0.0, traj.segments[-1].start_time + 8.0))
            closed = cumulative_hazard(traj, t)
            oracle = quad_cumulative_hazard(traj, t)
            assert closed == pytest.approx(oracle, rel=1e-9, abs=1e-12)

    @given(st.integers(0, 10_000), st.floats(0.0, 40.0), st.floats(0.0, 40.0))
    @settings(max_examples=60, deadline=None)
    def test_monotone_in_time(self, seed, a, b):
        traj = random_valid_trajectory(np.random.default_rng(seed))
        t1, t2 = sorted((a, b))
        assert cumulative_hazard(traj, t1) <= cumulative_hazard(traj, t2) + 1e-12

    @given(st.integers(0, 10_000), st.floats(0.0, 40.0))
    @settings(max_examples=60, deadline=None)
    def test_dominates_initial_rate(self, seed, t):
        # h(0) * t <= integral of h over [0, t]
        traj = random_valid_trajectory(np.random.default_rng(seed))
        h0 = hazard_at(traj, 0.0)
        assert h0 * t <= cumulative_hazard(traj, t) * (1.0 + 1e-12) + 1e-12


class TestReliabilityAndCdf:
    def test_constant_matches_exponential(self):
        assert reliability(CONSTANT_HALF, 2.0) == pytest.approx(math.exp(-1.0), abs=1e-15)

    def test_one_at_origin(self):
        assert reliability(CONSTANT_HALF, 0.0) == 1.0
        assert failure_cdf(CONSTANT_HALF, 0.0) == 0.0

    def test_weibull_shape(self):
        # quadrature oracle: H(1) = 1 for h(t) = 2t
        assert quad_cumulative_hazard(WEIBULL_SHAPE, 1.0) == pytest.approx(1.0, rel=1e-10)
        assert reliability(WEIBULL_SHAPE, 1.0) == pytest.approx(math.exp(-1.0), abs=1e-14)

    def test_cdf_linear(self):
        # oracle H(1) = 2 -> F = 1 - exp(-2)
        assert failure_cdf(LINEAR_1_2, 1.0) == pytest.approx(0.8646647167633873, abs=1e-15)

    def test_cdf_is_one_minus_reliability(self):
        rng = np.random.default_rng(5)
        traj = random_valid_trajectory(rng)
        for t in (0.0, 0.3, 1.7, 9.2):
            assert failure_cdf(traj, t) == pytest.approx(1.0 - reliability(traj, t), abs=1e-15)

    def test_reliability_strictly_decreasing(self):
        rng = np.random.default_rng(99)
        for _ in range(20):
            traj = random_valid_trajectory(rng)
            grid = np.linspace(0.0, traj.segments[-1].start_time + 5.0, 40)
            values = [reliability(traj, t) for t in grid]
            assert all(b < a for a, b in zip(values, values[1:]) if a > 1e-300)


class TestInversion:
    @given(st.integers(0, 10_000), st.floats(1e-6, 25.0))
    @settings(max_examples=80, deadline=None)
    def test_inverts_cumulative_hazard(self, seed, target):
        traj = random_valid_trajectory(np.random.default_rng(seed))
        t = invert_cumulative_hazard(traj, target)
        assert cumulative_hazard(traj, t) == pytest.approx(target, abs=1e-9)

    def test_power_segment_falls_back_to_root_finding(self):
        traj = HazardTrajectory((HazardSegment(0.0, Power(0.2, 0.3, 2.5)),))
        for target in (0.01, 1.0, 8.0, 30.0):
            t = invert_cumulative_hazard(traj, target)
            assert cumulative_hazard(traj, t) == pytest.approx(target, abs=1e-9)

    def test_negative_target_rejected(self):
        with pytest.raises(ValueError):
            invert_cumulative_hazard(CONSTANT_HALF, -1.0)


class TestRecoveredHazard:
    def test_constant(self):
        assert recovered_hazard(CONSTANT_HALF, 3.0, 1e-4) == pytest.approx(0.5, abs=1e-6)

    def test_linear(self):
        assert recovered_hazard(LINEAR_1_2, 1.0, 1e-4) == pytest.approx(3.0, abs=1e-5)

    def test_refuses_at_maintenance_epoch(self):
        with pytest.raises(ValueError, match="boundary"):
            recovered_hazard(SAWTOOTH_STEP, 10.0, 1e-4)

    def test_refuses_adjacent_to_boundary(self):
        with pytest.raises(ValueError, match="boundary"):
            recovered_hazard(SAWTOOTH_STEP, 10.00005, 1e-4)

    def test_refuses_too_close_to_origin(self):
        with pytest.raises(ValueError, match="time zero"):
            recovered_hazard(CONSTANT_HALF, 1e-6, 1e-4)

    def test_agrees_with_hazard_at_random_points(self):
        # consistency check: 100 non-boundary points per trajectory, 1e-5 band
        rng = np.random.default_rng(314)
        dt = 1e-4
        for _ in range(10):
            traj = random_valid_trajectory(rng)
            starts = [seg.start_time for seg in traj.segments]
            top = starts[-1] + 4.0
            checked = 0
            while checked < 100:
                t = float(rng.uniform(2 * dt, top))
                if any(abs(t - b) <= 2 * dt for b in starts[1:]):
                    continue
                if cumulative_hazard(traj, t) > 600.0:  # survival underflows
                    continue
                assert recovered_hazard(traj, t, dt) == pytest.approx(
                    hazard_at(traj, t), abs=1e-5, rel=1e-5
                )
                checked += 1


class TestMeanTimeToFailure:
    def test_constant_is_reciprocal_rate(self):
        assert mean_time_to_failure(CONSTANT_HALF) == pytest.approx(2.0, abs=1e-9)

    def test_weibull_shape_matches_gaussian_integral(self):
        # int_0^inf exp(-t^2) dt = sqrt(pi)/2
        assert mean_time_to_failure(WEIBULL_SHAPE) == pytest.approx(
            math.sqrt(math.pi) / 2.0, abs=1e-6
        )

    def test_sawtooth_matches_quadrature_oracle(self):
        assert mean_time_to_failure(SAWTOOTH_STEP) == pytest.approx(
            quad_mttf(SAWTOOTH_STEP), abs=1e-8
        )

    def test_nonconstant_tail(self):
        traj = HazardTrajectory((HazardSegment(0.0, ExponentialGrowth(0.4, 0.3)),))
        assert mean_time_to_failure(traj) == pytest.approx(quad_mttf(traj), abs=1e-8)

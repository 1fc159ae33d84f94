"""Sampler law, stream discipline, thinning oracle, export format."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import dkw_epsilon, one_sample_ks, two_sample_epsilon, two_sample_ks
from riskcheck.hazard import (
    Constant,
    HazardSegment,
    HazardTrajectory,
    Linear,
    Power,
    cumulative_hazard,
    failure_cdf,
)
from riskcheck.sampling import (
    EmpiricalDistribution,
    SeededStream,
    empirical_cdf,
    sample_failure_time,
    sample_failure_time_thinning,
    sample_many,
    sample_replicates,
    write_samples_csv,
)
from trajgen import random_valid_trajectory

CONSTANT_HALF = HazardTrajectory((HazardSegment(0.0, Constant(0.5)),))
CONSTANT_ONE = HazardTrajectory((HazardSegment(0.0, Constant(1.0)),))
WEIBULL_SHAPE = HazardTrajectory((HazardSegment(0.0, Linear(0.0, 2.0)),))


class TestSeededStream:
    def test_reproducible(self):
        a = SeededStream(123, 4).generator().standard_exponential()
        b = SeededStream(123, 4).generator().standard_exponential()
        assert a == b

    def test_streams_differ(self):
        a = SeededStream(123, 0).generator().standard_exponential()
        b = SeededStream(123, 1).generator().standard_exponential()
        assert a != b

    def test_negative_stream_id_rejected(self):
        with pytest.raises(ValueError):
            SeededStream(1, -1)


class TestInversionSampler:
    def test_constant_is_scaled_exponential(self):
        stream = SeededStream(7, 0)
        e = float(stream.generator().standard_exponential())
        assert sample_failure_time(CONSTANT_HALF, stream) == pytest.approx(e / 0.5, rel=1e-14)

    @given(st.integers(0, 100_000), st.integers(0, 64))
    @settings(max_examples=80, deadline=None)
    def test_inversion_identity(self, seed, stream_id):
        # |H(T) - E| <= 1e-9 where E is the generating exponential draw
        traj = random_valid_trajectory(np.random.default_rng(seed))
        stream = SeededStream(seed, stream_id)
        e = float(stream.generator().standard_exponential())
        t = sample_failure_time(traj, stream)
        assert abs(cumulative_hazard(traj, t) - e) <= 1e-9

    def test_weibull_shape_is_sqrt_of_exponential(self):
        # distributional oracle: T = sqrt(E) for h(t) = 2t
        n = 20_000
        draws = sample_replicates(WEIBULL_SHAPE, n, seed=11)
        oracle_rng = np.random.default_rng(2024)
        oracle = np.sqrt(oracle_rng.standard_exponential(n))
        assert two_sample_ks(draws, oracle) < two_sample_epsilon(n, n)

    def test_probability_integral_transform(self):
        rng = np.random.default_rng(88)
        traj = random_valid_trajectory(rng)
        n = 20_000
        pit = np.sort([failure_cdf(traj, t) for t in sample_replicates(traj, n, seed=5)])
        assert one_sample_ks(pit, lambda u: u) < dkw_epsilon(n)

    def test_power_form_ks_under_dkw(self):
        # the power antiderivative has no closed inverse, so this drives the
        # bracketed-Newton path through a distributional check
        traj = HazardTrajectory((HazardSegment(0.0, Power(0.2, 0.3, 2.5)),))
        n = 20_000
        draws = np.sort(sample_replicates(traj, n, seed=246))
        assert one_sample_ks(draws, lambda t: failure_cdf(traj, float(t))) < dkw_epsilon(n)


class TestThinningSampler:
    def test_degenerate_horizon_rejected(self):
        with pytest.raises(ValueError):
            sample_failure_time_thinning(CONSTANT_HALF, 0.0, SeededStream(1, 0))

    def test_matches_inversion_on_horizon(self):
        horizon, n = 100.0, 20_000
        inv = sample_replicates(CONSTANT_HALF, n, seed=21)
        inv = inv[inv <= horizon]
        thin = [
            sample_failure_time_thinning(CONSTANT_HALF, horizon, SeededStream(22, i))
            for i in range(n)
        ]
        thin = np.array([t for t in thin if t is not None])
        assert two_sample_ks(inv, thin) < two_sample_epsilon(len(inv), len(thin))

    def test_quadratic_hazard_always_accepts_before_horizon(self):
        # survival past t=10 has probability exp(-100); none of 2000 draws survive
        results = [
            sample_failure_time_thinning(WEIBULL_SHAPE, 10.0, SeededStream(3, i))
            for i in range(2000)
        ]
        assert all(r is not None and r < 10.0 for r in results)

    def test_survivors_reported_as_none(self):
        results = [
            sample_failure_time_thinning(CONSTANT_HALF, 0.05, SeededStream(9, i))
            for i in range(200)
        ]
        assert any(r is None for r in results)


class TestSampleMany:
    def test_singleton_matches_stream_zero(self):
        dist = sample_many(CONSTANT_ONE, 1, seed=42)
        assert dist.times == (sample_failure_time(CONSTANT_ONE, SeededStream(42, 0)),)

    def test_zero_replicates_rejected(self):
        with pytest.raises(ValueError):
            sample_many(CONSTANT_ONE, 0, seed=1)

    def test_mean_within_clt_band(self):
        n = 100_000
        dist = sample_many(CONSTANT_ONE, n, seed=31)
        assert abs(np.mean(dist.times) - 1.0) < 3.0 / math.sqrt(n)

    def test_worker_count_does_not_change_result(self):
        serial = sample_many(CONSTANT_ONE, 5000, seed=77, workers=1)
        threaded = sample_many(CONSTANT_ONE, 5000, seed=77, workers=4)
        assert serial == threaded

    def test_deterministic_across_runs(self):
        a = sample_replicates(WEIBULL_SHAPE, 1000, seed=13)
        b = sample_replicates(WEIBULL_SHAPE, 1000, seed=13)
        assert np.array_equal(a, b)


class TestEmpiricalDistribution:
    def test_cdf_steps(self):
        dist = EmpiricalDistribution((1.0, 2.0, 4.0), 3, seed=0)
        assert empirical_cdf(dist, 0.5) == 0.0
        assert empirical_cdf(dist, 1.0) == pytest.approx(1 / 3)
        assert empirical_cdf(dist, 2.0) == pytest.approx(2 / 3)
        assert empirical_cdf(dist, 3.0) == pytest.approx(2 / 3)
        assert empirical_cdf(dist, 4.0) == 1.0
        assert empirical_cdf(dist, 9.0) == 1.0

    def test_unsorted_rejected(self):
        with pytest.raises(ValueError):
            EmpiricalDistribution((2.0, 1.0), 2, seed=0)

    def test_count_mismatch_rejected(self):
        with pytest.raises(ValueError):
            EmpiricalDistribution((1.0, 2.0), 3, seed=0)

    def test_nonpositive_times_rejected(self):
        with pytest.raises(ValueError):
            EmpiricalDistribution((0.0, 1.0), 2, seed=0)


class TestCsvExport:
    def test_format_and_determinism(self, tmp_path):
        draws = sample_replicates(CONSTANT_HALF, 50, seed=6)
        csv_a, meta_a = write_samples_csv(tmp_path / "a", draws, 6, "deadbeef")
        csv_b, meta_b = write_samples_csv(tmp_path / "b", draws, 6, "deadbeef")
        assert csv_a.read_bytes() == csv_b.read_bytes()
        assert meta_a.read_bytes() == meta_b.read_bytes()
        lines = csv_a.read_text().splitlines()
        assert lines[0] == "replicate,failure_time"
        assert len(lines) == 51
        replicate, value = lines[1].split(",")
        assert replicate == "0"
        assert float(value) == draws[0]  # 17 significant digits round-trip

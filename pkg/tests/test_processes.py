import math

import numpy as np
import pytest

from betadens import (DomainError, ProcessKind, ProcessSpec, Sample,
                      ar1_binary_chain, ar1_step, gaussian_quantile_transform,
                      generate, lsv_step, lsv_trajectory, piecewise_quantile,
                      piecewise_quantile_transform)


def _ks_uniform(values: np.ndarray) -> float:
    xs = np.sort(values)
    k = len(xs)
    ranks = np.arange(1, k + 1) / k
    return float(max(np.abs(ranks - xs).max(), np.abs(xs - (ranks - 1.0 / k)).max()))


class TestAr1Chain:
    def test_single_step_recursion(self):
        assert ar1_step(0.5, 1) == 0.75
        assert ar1_step(0.5, 0) == 0.25

    def test_values_in_unit_interval(self):
        s = ar1_binary_chain(5000, seed=1)
        assert s.values.min() >= 0.0 and s.values.max() <= 1.0

    def test_length_and_spec(self):
        s = ar1_binary_chain(321, burn_in=10, seed=9)
        assert len(s) == 321
        assert s.spec == ProcessSpec(ProcessKind.AR1_BINARY, n=321, seed=9, burn_in=10)

    def test_trajectory_follows_recursion(self):
        # consecutive values must be related by X' = (X + eps)/2 for a bit
        # eps in {0, 1}, up to the 2^-64 fixed-point resolution
        s = ar1_binary_chain(2000, seed=5)
        x = s.values
        eps = (2.0 * x[1:] - x[:-1]).round()
        assert set(np.unique(eps)) <= {0.0, 1.0}
        assert np.max(np.abs(2.0 * x[1:] - x[:-1] - eps)) < 1e-15

    def test_deterministic_given_seed(self):
        a = ar1_binary_chain(1000, seed=77)
        b = ar1_binary_chain(1000, seed=77)
        assert np.array_equal(a.values, b.values)
        assert not np.array_equal(a.values, ar1_binary_chain(1000, seed=78).values)

    def test_marginal_is_uniform(self):
        # invariance of Uniform[0,1] under the kernel, checked empirically
        s = ar1_binary_chain(10**6, seed=2024)
        assert _ks_uniform(s.values) < 0.005

    def test_stationarity_over_windows(self):
        n = 2 * 10**5
        s = ar1_binary_chain(n, seed=31)
        half = n // 2
        tol = 3.0 / math.sqrt(half)
        for start in (0, n // 4, half):
            assert _ks_uniform(s.values[start:start + half]) < tol

    def test_rejects_bad_arguments(self):
        with pytest.raises(DomainError):
            ar1_binary_chain(0, seed=1)
        with pytest.raises(DomainError):
            ar1_binary_chain(10, burn_in=-1, seed=1)


class TestTransforms:
    def test_gaussian_median_maps_to_mu(self):
        spec = ProcessSpec(ProcessKind.AR1_BINARY, n=3, seed=0, burn_in=0)
        s = Sample(values=np.array([0.5, 0.975, 0.025]), spec=spec)
        y = gaussian_quantile_transform(s, mu=10.0, sigma2=2.0)
        assert y.values[0] == pytest.approx(10.0, abs=1e-12)
        z = gaussian_quantile_transform(s, mu=0.0, sigma2=1.0)
        assert z.values[1] == pytest.approx(1.959964, abs=1e-5)
        assert z.values[2] == pytest.approx(-1.959964, abs=1e-5)

    def test_gaussian_rejects_boundary_values(self):
        spec = ProcessSpec(ProcessKind.AR1_BINARY, n=2, seed=0)
        for bad in ([0.0, 0.5], [0.5, 1.0]):
            s = Sample(values=np.array(bad), spec=spec)
            with pytest.raises(DomainError):
                gaussian_quantile_transform(s, 0.0, 1.0)

    def test_piecewise_branch_values(self):
        assert piecewise_quantile(0.5) == pytest.approx(0.5, abs=1e-15)
        assert piecewise_quantile(0.125) == pytest.approx(0.25, abs=1e-15)
        assert piecewise_quantile(0.95) == pytest.approx(0.9, abs=1e-15)

    def test_piecewise_cdf_roundtrip(self):
        # forward CDF of the two-level density, written out independently
        def cdf(x):
            if x <= 0.25:
                return 0.5 * x
            if x <= 0.75:
                return 0.125 + 1.5 * (x - 0.25)
            return 0.875 + 0.5 * (x - 0.75)

        rng = np.random.default_rng(4)
        for u in np.concatenate([rng.random(200), [0.01, 0.12, 0.13, 0.87, 0.88, 0.99]]):
            assert cdf(float(piecewise_quantile(u))) == pytest.approx(u, abs=1e-12)

    def test_piecewise_rejects_outside_unit_interval(self):
        spec = ProcessSpec(ProcessKind.AR1_GAUSSIAN, n=2, seed=0, mu=0.0, sigma2=1.0)
        s = Sample(values=np.array([0.5, 1.2]), spec=spec)
        with pytest.raises(DomainError):
            piecewise_quantile_transform(s)

    def test_transform_updates_spec_kind(self):
        s = ar1_binary_chain(50, seed=3)
        assert piecewise_quantile_transform(s).spec.kind is ProcessKind.AR1_PIECEWISE
        g = gaussian_quantile_transform(s, 1.0, 4.0)
        assert g.spec.kind is ProcessKind.AR1_GAUSSIAN
        assert g.spec.mu == 1.0 and g.spec.sigma2 == 4.0


class TestLsvMap:
    def test_fixed_points_and_branches(self):
        assert lsv_step(0.0, 0.5) == 0.0
        assert lsv_step(1.0, 0.5) == 1.0
        assert lsv_step(0.75, 0.3) == 0.5

    def test_left_branch_closed_form(self):
        # x(1 + 2^g x^g) at x = 1/4, g = 1/2 is 1/4 + sqrt(2)/8
        assert lsv_step(0.25, 0.5) == pytest.approx(0.25 + math.sqrt(2.0) / 8.0, abs=1e-15)

    def test_rejects_outside_domain(self):
        with pytest.raises(DomainError):
            lsv_step(-0.1, 0.5)
        with pytest.raises(DomainError):
            lsv_step(1.1, 0.5)
        with pytest.raises(DomainError):
            lsv_step(0.5, 1.5)

    def test_single_iterate_matches_step(self):
        seed = 99
        s = lsv_trajectory(1, 0.3, burn_in=0, seed=seed)
        y0 = np.random.Generator(np.random.Philox(key=seed)).random()
        assert s.values[0] == lsv_step(y0, 0.3)

    def test_trajectory_equals_folded_steps(self):
        seed, gamma, n = 12, 0.6, 400
        s = lsv_trajectory(n, gamma, burn_in=0, seed=seed)
        x = np.random.Generator(np.random.Philox(key=seed)).random()
        manual = []
        for _ in range(n):
            x = lsv_step(x, gamma)
            manual.append(x)
        assert np.array_equal(s.values, np.array(manual))

    def test_values_in_unit_interval(self):
        s = lsv_trajectory(5000, 0.75, seed=8)
        assert s.values.min() >= 0.0 and s.values.max() <= 1.0

    def test_long_sojourns_near_zero_for_large_gamma(self):
        # the neutral fixed point holds trajectories much longer at gamma=3/4
        n = 10**5
        frac = {}
        for gamma in (0.25, 0.75):
            s = lsv_trajectory(n, gamma, seed=314)
            frac[gamma] = float(np.mean(s.values <= 0.05))
        assert frac[0.75] > frac[0.25]

    def test_deterministic(self):
        a = lsv_trajectory(500, 0.5, seed=6)
        b = lsv_trajectory(500, 0.5, seed=6)
        assert np.array_equal(a.values, b.values)


class TestSpecValidation:
    def test_generate_dispatch(self):
        for kind, extra in ((ProcessKind.AR1_BINARY, {}),
                            (ProcessKind.AR1_PIECEWISE, {}),
                            (ProcessKind.AR1_GAUSSIAN, {"mu": 0.0, "sigma2": 1.0}),
                            (ProcessKind.LSV_TRAJECTORY, {"gamma": 0.5})):
            spec = ProcessSpec(kind=kind, n=64, seed=5, burn_in=16, **extra)
            s = generate(spec)
            assert len(s) == 64 and s.spec == spec

    def test_generate_is_deterministic(self):
        spec = ProcessSpec(ProcessKind.AR1_PIECEWISE, n=256, seed=11)
        assert np.array_equal(generate(spec).values, generate(spec).values)

    def test_gamma_only_for_lsv(self):
        with pytest.raises(DomainError):
            ProcessSpec(ProcessKind.AR1_BINARY, n=10, gamma=0.5)
        with pytest.raises(DomainError):
            ProcessSpec(ProcessKind.LSV_TRAJECTORY, n=10)

    def test_mu_sigma_only_for_gaussian(self):
        with pytest.raises(DomainError):
            ProcessSpec(ProcessKind.AR1_BINARY, n=10, mu=0.0, sigma2=1.0)
        with pytest.raises(DomainError):
            ProcessSpec(ProcessKind.AR1_GAUSSIAN, n=10, mu=0.0)
        with pytest.raises(DomainError):
            ProcessSpec(ProcessKind.AR1_GAUSSIAN, n=10, mu=0.0, sigma2=-1.0)

    def test_sample_is_immutable(self):
        s = ar1_binary_chain(10, seed=0)
        with pytest.raises(ValueError):
            s.values[0] = 0.5

    def test_sample_length_must_match_spec(self):
        spec = ProcessSpec(ProcessKind.AR1_BINARY, n=3, seed=0)
        with pytest.raises(DomainError):
            Sample(values=np.array([0.1, 0.2]), spec=spec)

    def test_unit_interval_kinds_enforce_range(self):
        spec = ProcessSpec(ProcessKind.AR1_BINARY, n=2, seed=0)
        with pytest.raises(DomainError):
            Sample(values=np.array([0.5, 1.2]), spec=spec)
        lsv = ProcessSpec(ProcessKind.LSV_TRAJECTORY, n=1, seed=0, gamma=0.5)
        with pytest.raises(DomainError):
            Sample(values=np.array([-0.1]), spec=lsv)

    def test_seed_must_be_unsigned_64_bit(self):
        with pytest.raises(DomainError):
            ProcessSpec(ProcessKind.AR1_BINARY, n=2, seed=-1)
        with pytest.raises(DomainError):
            ProcessSpec(ProcessKind.AR1_BINARY, n=2, seed=2**64)

"""Peaks-over-threshold angles and the reflected KDE."""

import numpy as np
import pytest
from scipy import integrate

from pa_net.errors import DegenerateSampleError, InvalidParameterError
from pa_net.estimators.angular_samples import angular_samples, kde, nearest_rank, silverman_bandwidth


class TestThreshold:

    def test_nearest_rank(self):
        values = np.arange(1, 1001)
        assert nearest_rank(values, 0.995) == 995.0
        assert nearest_rank([3.0, 1.0, 2.0], 0.5) == 2.0

    def test_five_exceedances(self):
        pairs = np.column_stack([np.zeros(1000), np.arange(1, 1001)])
        sample = angular_samples(pairs, a=1.0, quantile=0.995)
        assert sample.threshold == 995.0
        assert len(sample) == 5
        np.testing.assert_array_equal(sample.theta, 0.0)

    def test_theta_range(self):
        gen = np.random.default_rng(1)
        pairs = gen.integers(0, 200, size=(5000, 2))
        sample = angular_samples(pairs, a=0.9, quantile=0.9)
        assert np.all((sample.theta >= 0.0) & (sample.theta <= 1.0))
        assert sample.n_input == int(np.sum(pairs.sum(axis=1) > 0))

    def test_power_applies_to_in_degree(self):
        sample = angular_samples([(4, 0), (0, 1), (1, 1), (9, 3)], a=0.5, quantile=0.5)
        # R = 2, 1, 2, 6 -> threshold 2; only (9, 3) exceeds it: theta = 3 / (3 + 3)
        np.testing.assert_allclose(sample.theta, [0.5])

    def test_validation(self):
        with pytest.raises(InvalidParameterError):
            angular_samples([(1, 1)], a=0.0)
        with pytest.raises(InvalidParameterError):
            angular_samples([(1, 1)], a=1.0, quantile=1.0)
        with pytest.raises(DegenerateSampleError):
            angular_samples([(0, 0)], a=1.0)


class TestKde:

    def test_single_point_peak(self):
        assert kde([0.5], [0.5], bandwidth=0.1)[0] == pytest.approx(3.989, abs=1e-3)

    def test_reflection_keeps_mass(self):
        gen = np.random.default_rng(2)
        x = gen.beta(0.7, 3.0, 400)
        grid = np.linspace(0.0, 1.0, 4001)
        dens = kde(x, grid)
        assert integrate.trapezoid(dens, grid) == pytest.approx(1.0, abs=1e-3)

    def test_boundary_symmetry(self):
        dens = kde([0.0], [0.0, 1e-3], bandwidth=0.05)
        assert dens[0] == pytest.approx(2.0 / (0.05 * np.sqrt(2 * np.pi)), rel=1e-6)

    def test_mirrored_sample_gives_symmetric_density(self):
        gen = np.random.default_rng(12)
        half = gen.beta(2.0, 5.0, 300)
        x = np.concatenate([half, 1.0 - half])
        grid = np.linspace(0.0, 1.0, 201)
        dens = kde(x, grid)
        np.testing.assert_allclose(dens, dens[::-1], rtol=1e-10, atol=1e-12)
        fixed = kde(x, grid, bandwidth=0.03)
        np.testing.assert_allclose(fixed, fixed[::-1], rtol=1e-10, atol=1e-12)

    def test_bandwidth(self):
        gen = np.random.default_rng(4)
        x = gen.normal(size=10_000)
        assert silverman_bandwidth(x) == pytest.approx(0.9 * x.std(ddof=1) * 10_000 ** -0.2, rel=0.05)
        with pytest.raises(DegenerateSampleError):
            silverman_bandwidth([0.3, 0.3, 0.3])

    def test_needs_samples(self):
        with pytest.raises(DegenerateSampleError):
            kde([0.4], [0.5])
        with pytest.raises(DegenerateSampleError):
            kde([], [0.5], bandwidth=0.1)
        with pytest.raises(InvalidParameterError):
            kde([0.4, 0.6], [0.5], bandwidth=0.0)

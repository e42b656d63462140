"""Hill estimator, KS tail distance and the minimum-distance k."""

import numpy as np
import pytest

from pa_net.engines.poisson_engine import simulate_poisson
from pa_net.errors import DegenerateSampleError, InvalidParameterError, UndefinedEstimateError
from pa_net.estimators.tail_index import (
    ccdf, ccdf_at, ccdf_envelope, hill, hill_path, ks_distance, min_distance_k, scan_range,
)


class TestHill:

    def test_four_points(self):
        assert hill([8, 4, 2, 1], 2) == pytest.approx(2.0 / np.log(8.0), abs=1e-12)
        assert hill([1, 8, 2, 4], 2) == pytest.approx(0.9618, abs=1e-4)

    def test_k_range(self):
        with pytest.raises(InvalidParameterError):
            hill([8, 4, 2, 1], 0)
        with pytest.raises(InvalidParameterError):
            hill([8, 4, 2, 1], 4)

    def test_ties_undefined(self):
        with pytest.raises(UndefinedEstimateError):
            hill([5, 5, 5, 1], 2)

    def test_zeros_ignored(self):
        assert hill([0, 0, 8, 4, 2, 1], 2) == hill([8, 4, 2, 1], 2)

    def test_pareto_two(self):
        estimates = []
        for seed in range(20):
            gen = np.random.default_rng(seed)
            sample = gen.pareto(2.0, 10_000) + 1.0
            estimates.append(hill(sample, 500))
        assert abs(np.median(estimates) - 2.0) < 0.15

    def test_path(self):
        path = hill_path([8, 4, 2, 1])
        assert path.shape == (3,)
        assert path[1] == pytest.approx(hill([8, 4, 2, 1], 2))


class TestKsDistance:

    def test_four_points(self):
        iota = hill([8, 4, 2, 1], 2)
        assert ks_distance([8, 4, 2, 1], 2, iota) == pytest.approx(0.4866, abs=1e-4)

    def test_bounded(self):
        gen = np.random.default_rng(3)
        sample = gen.pareto(1.5, 2000) + 1.0
        for k in (10, 100, 1000):
            d = ks_distance(sample, k, hill(sample, k))
            assert 0.0 <= d <= 1.0


class TestMinDistance:

    def test_scan_range_four_points(self):
        assert list(scan_range([8, 4, 2, 1])) == [1, 2]

    def test_picks_from_range(self):
        fit = min_distance_k([8, 4, 2, 1])
        assert fit.k_star in (1, 2)
        assert fit.distance == pytest.approx(ks_distance([8, 4, 2, 1], fit.k_star, fit.iota_hat))

    def test_needs_three_distinct(self):
        with pytest.raises(DegenerateSampleError):
            min_distance_k([3, 3, 1, 1])

    def test_k_max(self):
        gen = np.random.default_rng(0)
        sample = np.floor(gen.pareto(1.0, 5000) + 1.0)
        fit = min_distance_k(sample, k_max=50)
        assert 1 <= fit.k_star <= 50

    def test_recovers_pareto_index(self):
        gen = np.random.default_rng(11)
        sample = gen.pareto(1.8, 5000) + 1.0
        assert abs(min_distance_k(sample).iota_hat - 1.8) < 0.3

    @pytest.mark.slow
    def test_recovers_simulated_in_index(self, poisson_params):
        estimates = [min_distance_k(simulate_poisson(poisson_params, 20_000, seed=s)[0].in_degrees).iota_hat
                     for s in range(20)]
        assert abs(np.median(estimates) - 1.2) < 0.3


class TestCcdf:

    def test_values(self):
        vals, tail = ccdf([1, 1, 2, 3])
        np.testing.assert_array_equal(vals, [1, 2, 3])
        np.testing.assert_allclose(tail, [1.0, 0.5, 0.25])

    def test_at_points(self):
        np.testing.assert_allclose(ccdf_at([1, 1, 2, 3], [0, 1, 2.5, 4]), [1.0, 1.0, 0.25, 0.0])

    def test_envelope_is_survival(self):
        gen = np.random.default_rng(5)
        samples = [gen.geometric(0.3, 500) for _ in range(10)]
        points, lower, median, upper = ccdf_envelope(samples)
        assert np.all(np.diff(points) > 0)
        for curve in (lower, median, upper):
            assert curve[0] <= 1.0
            assert np.all(np.diff(curve) <= 1e-15)
        assert np.all(lower <= median) and np.all(median <= upper)

    def test_empty(self):
        with pytest.raises(DegenerateSampleError):
            ccdf([])
        with pytest.raises(DegenerateSampleError):
            ccdf_envelope([])

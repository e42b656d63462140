"""Limit angular density."""

import numpy as np
import pytest
from scipy import integrate

from pa_net.errors import InvalidParameterError
from pa_net.graph.degree_state import ModelParams
from pa_net.theory.angular import angular_density, default_theta_grid


def _sign_changes(values: np.ndarray) -> int:
    steps = np.sign(np.diff(values))
    steps = steps[steps != 0]
    return int(np.count_nonzero(np.diff(steps)))


class TestAngularDensity:

    def test_facebook_shape(self, facebook_params):
        grid = angular_density(facebook_params, default_theta_grid(512))
        assert integrate.trapezoid(grid.density, grid.theta) == pytest.approx(1.0, abs=1e-6)
        assert np.all(grid.density >= 0)
        assert _sign_changes(grid.density) <= 1
        assert 0.3 < grid.mode() < 0.5

    def test_a_exponent(self, base_params):
        grid = angular_density(base_params, default_theta_grid(64))
        assert grid.a == pytest.approx(0.8)
        assert np.isfinite(grid.log_normalization)

    def test_slashdot_refit_finite(self):
        params = ModelParams(p=0.3445, delta_in=1.5675, delta_out=0.4461, lam=13.79)
        grid = angular_density(params, default_theta_grid(128))
        assert np.all(np.isfinite(grid.density))
        assert integrate.trapezoid(grid.density, grid.theta) == pytest.approx(1.0, abs=1e-6)

    def test_grid_must_be_interior(self, base_params):
        with pytest.raises(InvalidParameterError):
            angular_density(base_params, [0.0, 0.5])
        with pytest.raises(InvalidParameterError):
            angular_density(base_params, [0.5, 1.0])
        with pytest.raises(InvalidParameterError):
            angular_density(base_params, [])

    def test_default_grid(self):
        grid = default_theta_grid(4)
        np.testing.assert_allclose(grid, [0.125, 0.375, 0.625, 0.875])

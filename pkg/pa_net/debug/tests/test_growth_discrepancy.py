"""Growth-product exponents and the early-vs-late node comparison."""

import numpy as np
import pytest

from pa_net.engines.base_engine import SimTrace
from pa_net.engines.poisson_engine import simulate_poisson
from pa_net.errors import InvalidParameterError, TraceTooShortError
from pa_net.oracles.discrepancy import node_discrepancy, paired_node
from pa_net.oracles.growth import growth_product


class TestGrowthProduct:

    def test_targets(self, poisson_params):
        _, trace = simulate_poisson(poisson_params, 200, seed=1)
        diag = growth_product(trace, poisson_params)
        assert diag.in_target == pytest.approx(0.8333, abs=1e-4)
        assert diag.out_target == pytest.approx(0.6667, abs=1e-4)
        assert diag.log_in_product.size == 201
        assert diag.log_in_product[0] == 0.0

    def test_slopes_match_exponents(self, poisson_params):
        _, trace = simulate_poisson(poisson_params, 5000, seed=7)
        diag = growth_product(trace, poisson_params)
        assert diag.in_slope == pytest.approx(diag.in_target, abs=0.05)
        assert diag.out_slope == pytest.approx(diag.out_target, abs=0.05)

    @pytest.mark.slow
    def test_mean_slopes_over_twenty_seeds(self, poisson_params):
        diags = [growth_product(simulate_poisson(poisson_params, 5000, seed=s)[1], poisson_params)
                 for s in range(20)]
        assert np.mean([d.in_slope for d in diags]) == pytest.approx(diags[0].in_target, abs=0.05)
        assert np.mean([d.out_slope for d in diags]) == pytest.approx(diags[0].out_target, abs=0.05)

    def test_products_increase(self, poisson_params):
        _, trace = simulate_poisson(poisson_params, 300, seed=2)
        diag = growth_product(trace, poisson_params)
        assert np.all(np.diff(diag.log_in_product) > 0)
        assert np.all(np.diff(diag.log_out_product) > 0)

    def test_short_trace(self, poisson_params):
        _, trace = simulate_poisson(poisson_params, 10, seed=3)
        with pytest.raises(TraceTooShortError):
            growth_product(trace, poisson_params)

    def test_needs_lambda(self, base_params):
        with pytest.raises(InvalidParameterError):
            growth_product(SimTrace(), base_params)


class TestDiscrepancy:

    def test_paired_node(self):
        assert paired_node(1, 10.0) == 1
        assert paired_node(5, 10.0) == 45
        assert paired_node(50, 10.0) == 540

    def test_report(self, poisson_params):
        report = node_discrepancy(poisson_params, 300, reps=40, nodes=(1, 10), seed=5, bootstrap=50)
        assert report.poisson_nodes == [1, 100]
        for i in (1, 10):
            assert 0.0 <= report.ks_in[i] <= 1.0
            assert report.traditional_in[i].shape == (40,)
        assert 0.0 <= report.bootstrap_fraction <= 1.0
        doc = report.to_dict()
        assert doc['nodes'] == [1, 10]
        assert set(doc['ks_in']) == {'1', '10'}

    @pytest.mark.slow
    def test_first_node_differs_most(self, poisson_params):
        report = node_discrepancy(poisson_params, 2000, reps=100, nodes=(1, 50), seed=11, bootstrap=1000)
        assert report.poisson_nodes == [1, 540]
        assert report.ks_in[1] > report.ks_in[50]
        assert report.bootstrap_fraction >= 0.95

    def test_validation(self, base_params, poisson_params):
        with pytest.raises(InvalidParameterError):
            node_discrepancy(base_params, 10, reps=5)
        with pytest.raises(InvalidParameterError):
            node_discrepancy(poisson_params, 10, reps=1)

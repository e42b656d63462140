"""Limit joint and marginal laws, tail exponents and their inversion."""

import numpy as np
import pytest
from scipy import integrate, special, stats

from pa_net.errors import InfeasibleInversionError, InvalidParameterError
from pa_net.graph.degree_state import ModelParams
from pa_net.theory.limit_laws import (
    delta_from_tail, joint_limit_grid, joint_limit_pmf, marginal_grid, marginal_in_closed_form,
    marginal_in_pmf, marginal_out_closed_form, marginal_out_pmf, nb_pmf, tail_constants, tail_exponents,
)


class TestJointPmf:

    def test_zero_one_cell(self, base_params):
        assert joint_limit_pmf(base_params, 0, 1) == pytest.approx(6.0 / 19.0, abs=1e-8)

    def test_support(self, base_params):
        with pytest.raises(InvalidParameterError):
            joint_limit_pmf(base_params, 0, 0)
        with pytest.raises(InvalidParameterError):
            joint_limit_pmf(base_params, -1, 1)

    def test_grid_matches_cells(self, base_params):
        grid = joint_limit_grid(base_params, 6, 5)
        for m, l in [(0, 1), (1, 1), (3, 2), (6, 5)]:
            assert grid.get(m, l) == pytest.approx(joint_limit_pmf(base_params, m, l), abs=1e-9)

    def test_grid_mass(self, base_params):
        grid = joint_limit_grid(base_params, 10, 10)
        assert np.all(grid.values >= 0)
        assert grid.total() + grid.overflow == pytest.approx(1.0, abs=1e-9)
        assert 0.0 < grid.overflow < 0.5

    def test_row_sums_match_marginal(self, base_params):
        # cells with l > 400 are integrated through the negative binomial survival function
        l_max = 400
        grid = joint_limit_grid(base_params, 20, l_max)
        tails = tail_exponents(base_params)
        c, a = tails.iota_in, tails.a
        beyond = [integrate.quad(lambda u: c * u ** (c - 1.0) * stats.nbinom.pmf(m, base_params.delta_in, u)
                                 * stats.nbinom.sf(l_max - 1, 1.0 + base_params.delta_out, u ** a),
                                 0.0, 1.0, epsabs=1e-12, limit=200)[0]
                  for m in range(21)]
        rows = grid.values.sum(axis=1) + np.asarray(beyond)
        np.testing.assert_allclose(rows, marginal_in_closed_form(base_params, np.arange(21)), rtol=0, atol=1e-7)

    def test_column_sum_matches_out_marginal(self, base_params):
        m_max = 200
        grid = joint_limit_grid(base_params, m_max, 1)
        tails = tail_exponents(base_params)
        c, a = tails.iota_in, tails.a
        beyond, _ = integrate.quad(lambda u: c * u ** (c - 1.0) * stats.nbinom.sf(m_max, base_params.delta_in, u)
                                   * u ** (a * (1.0 + base_params.delta_out)),
                                   0.0, 1.0, epsabs=1e-13, limit=200)
        column = float(grid.values[:, 0].sum()) + beyond
        assert column == pytest.approx(marginal_out_pmf(base_params, 1), abs=1e-8)

    @pytest.mark.parametrize("m,l", [(0, 1), (2, 3)])
    def test_delta_in_sensitivity(self, base_params, m, l):
        p, d_in, d_out = base_params.p, base_params.delta_in, base_params.delta_out
        iota_out = tail_exponents(base_params).iota_out
        c = 1.0 + d_in * p

        def derivative(t):
            q = t ** (1.0 / c)
            dlog_q = -p * np.log(t) / c ** 2
            drift = d_in - (m * q / (1.0 - q) if m else 0.0)
            score = special.digamma(d_in + m) - special.digamma(d_in) + np.log(q) + drift * dlog_q
            return (stats.nbinom.pmf(m, d_in, q) * score
                    * stats.nbinom.pmf(l - 1, 1.0 + d_out, t ** (1.0 / iota_out)))

        exact, _ = integrate.quad(derivative, 0.0, 1.0, epsabs=1e-11, limit=200)
        h = 1e-3
        up = joint_limit_pmf(ModelParams(p=p, delta_in=d_in + h, delta_out=d_out), m, l)
        down = joint_limit_pmf(ModelParams(p=p, delta_in=d_in - h, delta_out=d_out), m, l)
        assert (up - down) / (2 * h) == pytest.approx(exact, abs=1e-4)

    @pytest.mark.slow
    def test_one_one_cell_against_sampling(self, base_params):
        gen = np.random.default_rng(77)
        n = 1_000_000
        tails = tail_exponents(base_params)
        t = 1.0 - gen.random(n)
        ins = gen.negative_binomial(base_params.delta_in, t ** (1.0 / tails.iota_in))
        outs = 1 + gen.negative_binomial(1.0 + base_params.delta_out, t ** (1.0 / tails.iota_out))
        hat = float(np.mean((ins == 1) & (outs == 1)))
        se = np.sqrt(hat * (1.0 - hat) / n)
        assert abs(hat - joint_limit_pmf(base_params, 1, 1)) < 3 * se

    def test_large_offsets_finite(self, facebook_params):
        value = joint_limit_pmf(facebook_params, 0, 1)
        assert np.isfinite(value) and 0.0 < value < 1.0


class TestMarginals:

    def test_in_zero(self):
        params = ModelParams(p=0.5, delta_in=1.0, delta_out=1.0)
        assert marginal_in_pmf(params, 0) == pytest.approx(0.6, abs=1e-8)

    @pytest.mark.parametrize("m", [0, 1, 5, 40])
    def test_in_quadrature_matches_closed_form(self, base_params, m):
        assert marginal_in_pmf(base_params, m) == pytest.approx(float(marginal_in_closed_form(base_params, m)),
                                                                rel=1e-7, abs=1e-12)

    @pytest.mark.parametrize("l", [1, 2, 7, 30])
    def test_out_quadrature_matches_closed_form(self, facebook_params, l):
        assert marginal_out_pmf(facebook_params, l) == pytest.approx(
            float(marginal_out_closed_form(facebook_params, l)), rel=1e-7, abs=1e-12)

    def test_grids_sum_below_one(self, base_params):
        for direction in ('in', 'out'):
            grid = marginal_grid(base_params, 2000, direction)
            assert grid.total() <= 1.0 + 1e-12
            assert grid.total() > 0.99

    def test_power_law_asymptote(self, base_params):
        c_in, c_out = tail_constants(base_params)
        tails = tail_exponents(base_params)
        m = 10_000
        ratio = float(marginal_in_closed_form(base_params, m)) / (c_in * m ** -(1 + tails.iota_in))
        assert ratio == pytest.approx(1.0, abs=0.01)
        ratio = float(marginal_out_closed_form(base_params, m)) / (c_out * m ** -(1 + tails.iota_out))
        assert ratio == pytest.approx(1.0, abs=0.01)


class TestTailExponents:

    def test_values(self, base_params):
        tails = tail_exponents(base_params)
        assert tails.iota_in == pytest.approx(1.2)
        assert tails.iota_out == pytest.approx(1.5)
        assert tails.a == pytest.approx(0.8)

    def test_inversion_round_trip(self, facebook_params):
        tails = tail_exponents(facebook_params)
        d_in, d_out = delta_from_tail(tails.iota_in, tails.iota_out, facebook_params.p)
        assert d_in == pytest.approx(facebook_params.delta_in)
        assert d_out == pytest.approx(facebook_params.delta_out)

    def test_infeasible(self):
        with pytest.raises(InfeasibleInversionError) as info:
            delta_from_tail(0.9, 2.0, 0.3)
        assert info.value.iota_in == 0.9

    def test_bad_p(self):
        with pytest.raises(InvalidParameterError):
            delta_from_tail(2.0, 2.0, 1.0)


class TestNegativeBinomial:

    def test_sums_to_one(self):
        total = sum(nb_pmf(2.5, 0.3, k) for k in range(400))
        assert total == pytest.approx(1.0, abs=1e-10)

    def test_degenerate_q(self):
        assert nb_pmf(1.0, 1.0, 0) == 1.0
        assert nb_pmf(1.0, 1.0, 3) == 0.0

    def test_validation(self):
        with pytest.raises(InvalidParameterError):
            nb_pmf(0.0, 0.5, 1)
        with pytest.raises(InvalidParameterError):
            nb_pmf(1.0, 0.0, 1)

"""Traditional and Poisson growth engines, traces and empirical joint counts."""

import time
from types import SimpleNamespace

import numpy as np
import pytest

from pa_net.errors import InvalidParameterError
from pa_net.engines.degree_counts import joint_degree_counts, node_degree_at
from pa_net.engines.poisson_engine import PoissonEngine, engine_for, simulate_poisson, step_poisson
from pa_net.engines.traditional_engine import simulate_traditional, step_traditional
from pa_net.graph.degree_state import DegreeState, ModelParams, RngStream
from pa_net.theory.limit_laws import joint_limit_grid
from pa_net.theory.pmf_grid import total_variation


class TestTraditionalStep:

    def test_first_step_outcomes(self, base_params):
        seen = set()
        rng = RngStream(17)
        for _ in range(400):
            state = step_traditional(DegreeState(), base_params, rng)
            seen.add(tuple(map(tuple, state.degree_pairs())))
        assert seen == {((2, 2),), ((2, 1), (0, 1))}

    def test_always_spawn(self):
        params = SimpleNamespace(p=1.0, delta_in=1.0, delta_out=1.0, lam=None)
        state = DegreeState()
        rng = RngStream(3)
        for _ in range(50):
            step_traditional(state, params, rng)
        assert state.node_count == 51
        assert np.all(state.out_degrees[1:] == 1)

    def test_zero_steps(self, base_params):
        state, trace = simulate_traditional(base_params, 0, seed=1)
        assert state == DegreeState()
        assert trace.steps == 0


class TestTraditionalRun:

    def test_conservation_and_reproducibility(self, base_params):
        a, trace = simulate_traditional(base_params, 2000, seed=42)
        b, _ = simulate_traditional(base_params, 2000, seed=42)
        assert a == b
        assert a.in_deg.sum() == 2001
        a.check_invariants()
        np.testing.assert_array_equal(trace.m, np.arange(2001))

    def test_node_fraction(self, base_params):
        fractions = [simulate_traditional(base_params, 20_000, seed=s)[0].node_count / 20_000
                     for s in range(5)]
        assert abs(np.median(fractions) - 0.2) < 0.01

    def test_checkpoints(self, base_params):
        state, trace = simulate_traditional(base_params, 100, seed=9, checkpoints=[0, 50, 100])
        assert sorted(trace.checkpoints) == [0, 50, 100]
        ins, outs = trace.checkpoints[100]
        np.testing.assert_array_equal(ins, state.in_degrees)
        assert trace.checkpoints[50][0].sum() == 51

    def test_negative_steps(self, base_params):
        with pytest.raises(InvalidParameterError):
            simulate_traditional(base_params, -1, seed=0)


class TestPoissonStep:

    def test_first_batch_hits_node_one(self, poisson_params):
        rng = RngStream(8)
        state = step_poisson(DegreeState(), poisson_params, rng)
        m = state.edge_total - 1
        assert state.node_degree(1)[0] == 1 + m
        assert np.all(state.in_degrees[1:] == 0)

    def test_needs_lambda(self, base_params):
        with pytest.raises(InvalidParameterError):
            PoissonEngine(base_params)

    def test_batch_size_mean(self, poisson_params):
        engine = PoissonEngine(poisson_params)
        rng = RngStream(0)
        sizes = np.array([engine.batch_size(rng) for _ in range(100_000)])
        se = np.sqrt(10.0 / sizes.size)
        assert abs(sizes.mean() - 11.0) < 3 * se

    def test_batch_nodes_get_no_edges(self, poisson_params):
        state, _ = simulate_poisson(poisson_params, 50, seed=4)
        rng = RngStream(12)
        engine = PoissonEngine(poisson_params)
        for _ in range(30):
            before = state.node_count
            engine.step(state, rng)
            assert np.all(state.in_deg[before + 1:] == 0)
            assert np.all(state.out_deg[before + 1:] == 1)

    def test_within_batch_draws_uncorrelated(self, two_node_state):
        params = ModelParams(p=0.5, delta_in=1.0, delta_out=1.0, lam=1.0)
        rng = RngStream(21)
        firsts, seconds = [], []
        for _ in range(20_000):
            state = two_node_state.copy()
            PoissonEngine(params).step(state, rng)
            added = state.in_endpoints[2:]
            if added.size >= 2:
                firsts.append(added[0])
                seconds.append(added[1])
        corr = np.corrcoef(firsts, seconds)[0, 1]
        assert abs(corr) < 0.03


class TestPoissonRun:

    def test_conservation_and_trace(self, poisson_params):
        state, trace = simulate_poisson(poisson_params, 500, seed=5)
        state.check_invariants()
        assert state.in_deg.sum() == 1 + trace.m[-1]
        assert np.all(np.diff(trace.m) >= 1)
        assert np.all(np.diff(trace.v) >= 0)

    def test_reproducible(self, poisson_params):
        a, _ = simulate_poisson(poisson_params, 300, seed=77)
        b, _ = simulate_poisson(poisson_params, 300, seed=77)
        c, _ = simulate_poisson(poisson_params, 300, seed=78)
        assert a == b
        assert a != c

    def test_node_growth(self, poisson_params):
        fractions = [simulate_poisson(poisson_params, 10_000, seed=s)[0].node_count / 10_000
                     for s in range(5)]
        assert abs(np.median(fractions) - 2.2) < 0.05

    def test_engine_for(self, poisson_params):
        assert engine_for(poisson_params, 'poisson').name == 'poisson'
        assert engine_for(poisson_params, 'traditional').name == 'traditional'
        with pytest.raises(InvalidParameterError):
            engine_for(poisson_params, 'batch')


class TestJointCounts:

    def test_initial_graph(self):
        grid = joint_degree_counts(DegreeState(), 5, 5)
        assert grid.get(1, 1) == 1.0
        assert grid.overflow == 0.0

    def test_sums_to_one(self, poisson_params):
        state, _ = simulate_poisson(poisson_params, 200, seed=3)
        grid = joint_degree_counts(state, 4, 4)
        assert np.all(grid.values >= 0)
        assert grid.total() + grid.overflow == pytest.approx(1.0, abs=1e-12)

    def test_node_degree_at(self, two_node_state):
        assert node_degree_at(two_node_state, 2) == (0, 1)
        assert node_degree_at(two_node_state, 9) == (0, 0)

    @pytest.mark.slow
    def test_converges_to_limit(self, poisson_params):
        limit = joint_limit_grid(poisson_params, 10, 10)
        distances = [total_variation(joint_degree_counts(simulate_poisson(poisson_params, 5000, seed=s)[0], 10, 10),
                                     limit)
                     for s in range(10)]
        assert np.mean(distances) < 0.05

    @pytest.mark.slow
    def test_traditional_converges_to_limit(self, base_params):
        limit = joint_limit_grid(base_params, 10, 10)
        grids = [joint_degree_counts(simulate_traditional(base_params, 55_000, seed=s)[0], 10, 10)
                 for s in range(3)]
        assert np.mean([total_variation(g, limit) for g in grids]) < 0.05

    @pytest.mark.slow
    def test_poisson_and_traditional_agree(self, base_params, poisson_params):
        traditional = joint_degree_counts(simulate_traditional(base_params, 55_000, seed=4)[0], 10, 10)
        poisson = joint_degree_counts(simulate_poisson(poisson_params, 5000, seed=4)[0], 10, 10)
        assert total_variation(traditional, poisson) < 0.1


class TestThroughput:

    @pytest.mark.slow
    def test_facebook_scale_under_five_seconds(self, facebook_params):
        start = time.perf_counter()
        state, _ = simulate_poisson(facebook_params, 7140, seed=2009)
        elapsed = time.perf_counter() - start
        assert state.edge_total > 7140 * 40
        assert elapsed < 5.0

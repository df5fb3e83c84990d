from __future__ import annotations

import math

import pytest

from shapcent import (
    GaussianMoment,
    Graph,
    ShapleyVector,
    gaussian_interval_prob,
    shapley_g1,
    shapley_g2,
    shapley_g3,
    shapley_g4,
    shapley_g5,
    solve,
)
from shapcent.bench import gen_complete_weighted, gen_gnp
from shapcent.exact import read_scores
from shapcent.games import DecayFn, GameSpec, GameSpecError
from shapcent.oracle import brute_force_shapley

from .conftest import random_small_graph

INF = math.inf


class TestShapleyVector:
    def test_csv_round_trip(self):
        vec = ShapleyVector((0.5, 1.0 / 3.0, 2.25), game="g1", method="exact")
        back = read_scores(vec.to_csv(), game="g1")
        assert back.scores == pytest.approx(vec.scores, abs=1e-11)

    def test_csv_uses_12_significant_digits(self):
        vec = ShapleyVector((1.0 / 3.0,), game="g1", method="exact")
        assert vec.to_csv() == "0,0.333333333333\n"

    def test_tsv_separator(self):
        vec = ShapleyVector((1.0, 2.0), game="g1", method="exact")
        assert vec.to_csv(sep="\t") == "0\t1\n1\t2\n"

    def test_read_scores_requires_dense_ids(self):
        with pytest.raises(ValueError, match="dense"):
            read_scores("0,1.0\n2,2.0\n")


class TestGaussianIntervalProb:
    def test_symmetric_interval(self):
        m = GaussianMoment(0.0, 1.0)
        assert gaussian_interval_prob(m, -1.0, 1.0) == pytest.approx(0.6826894921, abs=1e-9)

    def test_infinite_bounds(self):
        m = GaussianMoment(3.0, 4.0)
        assert gaussian_interval_prob(m, -INF, INF) == pytest.approx(1.0)
        assert gaussian_interval_prob(m, -INF, 3.0) == pytest.approx(0.5)

    def test_degenerate_half_open(self):
        m = GaussianMoment(1.0, 0.0)
        assert gaussian_interval_prob(m, 1.0, 2.0) == 1.0
        assert gaussian_interval_prob(m, 0.0, 1.0) == 0.0  # hi is exclusive

    def test_empty_interval_rejected(self):
        with pytest.raises(ValueError, match="empty interval"):
            gaussian_interval_prob(GaussianMoment(0.0, 1.0), 2.0, 1.0)

    def test_negative_variance_rejected(self):
        with pytest.raises(ValueError, match="negative variance"):
            GaussianMoment(0.0, -1e-9)

    def test_monotone_in_upper_bound(self):
        m = GaussianMoment(0.5, 0.25)
        probs = [gaussian_interval_prob(m, 0.0, hi) for hi in (0.2, 0.5, 1.0, 2.0)]
        assert probs == sorted(probs)


class TestFringeSolver:
    def test_path_values(self, path3):
        assert shapley_g1(path3).scores == pytest.approx((5 / 6, 4 / 3, 5 / 6))

    def test_star_values(self, star4):
        # center: 1/4 + 3*(1/2); leaf: 1/2 + 1/4
        assert shapley_g1(star4).scores == pytest.approx((7 / 4, 3 / 4, 3 / 4, 3 / 4))

    def test_isolated_node_scores_one(self):
        g = Graph.build(3, [(0, 1, 1.0)])
        assert shapley_g1(g).scores[2] == 1.0

    def test_directed_uses_in_degree(self):
        g = Graph.build(2, [(0, 1, 1.0)], directed=True)
        # node 0: own term 1/(1+0) plus fringe term 1/(1+deg_in(1)) = 1/2
        assert shapley_g1(g).scores == pytest.approx((1.5, 0.5))


class TestThresholdSolver:
    def test_star_with_k2(self, star4):
        got = shapley_g2(star4, 2).scores
        assert got == pytest.approx((1 / 2, 7 / 6, 7 / 6, 7 / 6))

    def test_per_node_k(self, star4):
        uniform = shapley_g2(star4, 1).scores
        per_node = shapley_g2(star4, {v: 1 for v in range(4)}).scores
        assert uniform == per_node

    def test_invalid_k_propagates(self, star4):
        with pytest.raises(GameSpecError):
            shapley_g2(star4, 5)


class TestCutoffSolver:
    def test_path_cutoff_two_covers_everything(self, path3):
        # every node reaches every other within distance 2: ext degree 2 everywhere
        assert shapley_g3(path3, 2.0).scores == pytest.approx((1.0, 1.0, 1.0))

    def test_per_node_cutoff(self, path3):
        got = shapley_g3(path3, {0: 2.0, 1: 1.0, 2: 1.0}).scores
        # node 0 reachable within its own cutoff from all: ext_degree[0] = 2
        assert sum(got) == pytest.approx(3.0)

    def test_directed_uses_reverse_reach_for_degree(self):
        g = Graph.build(2, [(0, 1, 1.0)], directed=True)
        # ext_degree(1) = 1 (node 0 reaches it); ext_degree(0) = 0
        assert shapley_g3(g, 1.0).scores == pytest.approx((1.5, 0.5))


class TestProximitySolver:
    def test_two_clique(self):
        g = Graph.build(2, [(0, 1, 1.0)])
        got = shapley_g4(g, DecayFn.inv_linear()).scores
        assert got == pytest.approx((1.0, 1.0))

    def test_path_values(self, path3):
        got = shapley_g4(path3, DecayFn.inv_linear()).scores
        assert got == pytest.approx((35 / 36, 19 / 18, 35 / 36))

    def test_accepts_plain_callable(self, path3):
        a = shapley_g4(path3, DecayFn.inv_quadratic()).scores
        b = shapley_g4(path3, lambda d: 1.0 / (1.0 + d * d)).scores
        assert a == pytest.approx(b)

    def test_equal_distances_share_value(self, star4):
        got = shapley_g4(star4, DecayFn.exponential()).scores
        assert got[1] == got[2] == got[3]

    def test_disconnected_components_are_independent(self):
        g = Graph.build(4, [(0, 1, 1.0), (2, 3, 1.0)])
        got = shapley_g4(g, DecayFn.inv_linear()).scores
        assert got[0] == got[1] == got[2] == got[3]
        assert sum(got) == pytest.approx(4.0)


class TestWeightedThresholdSolver:
    def test_two_clique_splits_evenly(self):
        g = Graph.build(2, [(0, 1, 0.6)], weighted=True)
        got = shapley_g5(g, 0.5).scores
        assert got == pytest.approx((1.0, 1.0))

    def test_brute_force_path_matches_oracle(self):
        for seed in range(5):
            g = gen_complete_weighted(5, seed=seed)
            spec = GameSpec.weighted_threshold(1.0)
            want = brute_force_shapley(g, spec).scores
            got = shapley_g5(g, 1.0, brute_force_degree_limit=12).scores
            assert got == pytest.approx(want, abs=1e-9)

    def test_gaussian_path_stays_close_to_brute_force(self):
        g = gen_complete_weighted(8, seed=11)
        exact = shapley_g5(g, 1.5, brute_force_degree_limit=12).scores
        approx = shapley_g5(g, 1.5, brute_force_degree_limit=2).scores
        for a, b in zip(approx, exact):
            assert abs(a - b) / b < 0.25

    def test_isolated_node_is_always_counted(self):
        g = Graph.build(3, [(0, 1, 1.0)], weighted=True)
        assert shapley_g5(g, 0.5).scores[2] == 1.0

    def test_degree_limit_below_two_rejected(self, path3):
        with pytest.raises(GameSpecError):
            shapley_g5(path3, 0.5, brute_force_degree_limit=1)

    def test_efficiency(self):
        g = gen_complete_weighted(9, seed=3)
        got = shapley_g5(g, 2.0, brute_force_degree_limit=12).scores
        assert sum(got) == pytest.approx(9.0, abs=1e-9)


class TestSolveDispatch:
    def test_method_tags(self, path3):
        assert solve(path3, GameSpec.fringe()).method == "exact"
        assert solve(path3, GameSpec.threshold(1)).method == "exact"
        assert solve(path3, GameSpec.cutoff(1.0)).method == "exact"
        assert solve(path3, GameSpec.proximity(DecayFn.exponential())).method == "exact"
        assert solve(path3, GameSpec.weighted_threshold(0.5)).method == "gaussian_approx"

    def test_game_tags(self, path3):
        for spec, tag in [
            (GameSpec.fringe(), "g1"),
            (GameSpec.threshold(1), "g2"),
            (GameSpec.cutoff(1.0), "g3"),
            (GameSpec.proximity(DecayFn.inv_linear()), "g4"),
            (GameSpec.weighted_threshold(0.5), "g5"),
        ]:
            assert solve(path3, spec).game == tag

    @pytest.mark.parametrize("seed", range(8))
    def test_efficiency_on_random_graphs(self, seed):
        g = random_small_graph(seed, n_max=10)
        n = g.node_count
        for spec in (
            GameSpec.fringe(),
            GameSpec.threshold(1),
            GameSpec.cutoff(1.2),
            GameSpec.proximity(DecayFn.inv_quadratic()),
        ):
            assert sum(solve(g, spec).scores) == pytest.approx(float(n), abs=1e-9)

    def test_linear_time_solvers_scale(self):
        import time

        times = []
        for n in (2000, 4000):
            g = gen_gnp(n, 5.0 / (n - 1), seed=7)
            t0 = time.perf_counter()
            shapley_g1(g)
            shapley_g2(g, 1)
            times.append(time.perf_counter() - t0)
        # doubling |V| at constant average degree should stay near-linear
        assert times[1] / times[0] < 8.0

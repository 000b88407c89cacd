import math

import numpy as np
import pytest

from horse import (
    DomainError,
    RuleSet,
    TurnResult,
    score_prob,
    simulate_turn,
    simulate_turns,
    turn_point_distribution,
    turn_score_estimate,
)
from horse.simulate import make_rng
from oracles import enumerate_turn_points, geometric_mean_rounds

TR, PR = RuleSet.TRADITIONAL, RuleSet.POPS
N = 1_000_000


def within_4_se(estimate, truth, n):
    return abs(estimate - truth) <= 4 * math.sqrt(truth * (1 - truth) / n)


class TestSingleTurn:
    def test_turn_result_needs_a_shot(self):
        with pytest.raises(ValueError):
            TurnResult(False, 0)

    def test_scalar_turn_is_reproducible(self):
        a, b = make_rng(5), make_rng(5)
        assert [simulate_turn(TR, 0.7, 0.6, a) for _ in range(50)] == \
            [simulate_turn(TR, 0.7, 0.6, b) for _ in range(50)]

    def test_pops_turn_is_one_round(self):
        rng = make_rng(1)
        assert all(simulate_turn(PR, 0.9, 0.9, rng).shots_taken == 1 for _ in range(200))

    def test_scalar_agrees_with_closed_form(self):
        rng = make_rng(8)
        n = 20_000
        hits = sum(simulate_turn(TR, 0.6, 0.4, rng).scored for _ in range(n))
        assert within_4_se(hits / n, 9 / 19, n)

    def test_domain(self):
        with pytest.raises(DomainError):
            simulate_turn(TR, 1.0, 0.5, make_rng(0))
        with pytest.raises(DomainError):
            simulate_turns(TR, 0.5, 0.5, 0, make_rng(0))


class TestMonteCarloOracle:
    def test_equal_half_traditional(self):
        est, _ = turn_score_estimate(TR, 0.5, 0.5, N, 42)
        assert within_4_se(est, 1 / 3, N)

    def test_pops_high_skill(self):
        est, _ = turn_score_estimate(PR, 0.9, 0.9, N, 42)
        assert within_4_se(est, 0.09, N)

    def test_unequal_traditional_golden_value(self):
        # 9/19 was confirmed against this oracle before being used as a golden value
        est, se = turn_score_estimate(TR, 0.6, 0.4, N, 2022)
        assert within_4_se(est, 9 / 19, N)
        assert se == pytest.approx(math.sqrt(est * (1 - est) / N))

    def test_mean_turn_length(self):
        p = 0.8
        _, shots = simulate_turns(TR, p, p, N, make_rng(99))
        mean_rounds = geometric_mean_rounds(1 - p * p)
        assert mean_rounds == pytest.approx(25 / 9, abs=1e-12)
        var = p * p / (1 - p * p) ** 2
        assert abs(shots.mean() - mean_rounds) < 4 * math.sqrt(var / N)

    def test_seed_reproducibility(self):
        assert turn_score_estimate(TR, 0.3, 0.8, 10_000, 7) == turn_score_estimate(TR, 0.3, 0.8, 10_000, 7)
        assert turn_score_estimate(TR, 0.3, 0.8, 10_000, 7) != turn_score_estimate(TR, 0.3, 0.8, 10_000, 8)

    def test_scored_turns_end_on_first_point(self):
        scored, shots = simulate_turns(PR, 0.5, 0.5, 1000, make_rng(3))
        assert shots.min() == 1 and shots.max() == 1
        assert scored.dtype == bool


class TestPointDistribution:
    @pytest.mark.parametrize("rules", [TR, PR])
    @pytest.mark.parametrize("p1, p2", [(0.5, 0.5), (0.9, 0.2), (0.3, 0.7)])
    def test_matches_enumeration(self, rules, p1, p2):
        dist = turn_point_distribution(rules, p1, p2, 6)
        exact, residual = enumerate_turn_points(rules, p1, p2, max_rounds=400)
        assert residual < 1e-10
        for k in range(6):
            assert dist[k] == pytest.approx(exact.get(k, 0.0), abs=1e-10)
        tail = sum(v for k, v in exact.items() if k >= 6)
        assert dist[6] == pytest.approx(tail, abs=1e-10)

    def test_exactly_one_point_equal_half(self):
        exact, residual = enumerate_turn_points(TR, 0.5, 0.5, max_rounds=40)
        assert residual < 1e-10
        assert exact[1] == pytest.approx(2 / 9, abs=1e-10)
        assert turn_point_distribution(TR, 0.5, 0.5, 3)[1] == pytest.approx(2 / 9, abs=1e-15)

    @pytest.mark.parametrize("rules", [TR, PR])
    def test_first_point_and_complement(self, rules):
        for p1, p2 in [(0.2, 0.9), (0.6, 0.4), (0.95, 0.95)]:
            dist = turn_point_distribution(rules, p1, p2, 1)
            assert dist[1] == pytest.approx(score_prob(rules, p1, p2), abs=1e-15)
            assert dist[0] == pytest.approx(1 - score_prob(rules, p1, p2), abs=1e-15)

    def test_normalisation(self):
        rng = np.random.default_rng(4)
        for _ in range(1000):
            p1, p2 = rng.uniform(1e-6, 1 - 1e-6, 2)
            m = int(rng.integers(1, 30))
            rules = TR if rng.random() < 0.5 else PR
            dist = turn_point_distribution(rules, p1, p2, m)
            assert len(dist) == m + 1
            assert abs(sum(dist) - 1) < 1e-12
            assert min(dist) >= 0

    def test_against_multi_point_simulation(self):
        # whole turns with restarts after S2, played shot by shot
        rng = make_rng(12)
        p1, p2, n = 0.7, 0.3, 200_000
        points = np.zeros(n, dtype=int)
        active = np.arange(n)
        while active.size:
            u = rng.random((2, active.size))
            made, followed = u[0] < p1, u[1] < p2
            points[active[made & ~followed]] += 1
            active = active[made]  # TR: S2 and S3 both keep the turn alive
        dist = turn_point_distribution(TR, p1, p2, 4)
        observed = [np.mean(points == k) for k in range(4)] + [np.mean(points >= 4)]
        for obs, exp in zip(observed, dist):
            assert abs(obs - exp) < 4 * math.sqrt(exp * (1 - exp) / n)

    @pytest.mark.parametrize("bad", [0, -1, 2.5])
    def test_bad_max_points(self, bad):
        with pytest.raises(DomainError):
            turn_point_distribution(TR, 0.5, 0.5, bad)

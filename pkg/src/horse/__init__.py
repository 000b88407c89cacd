"""Probability model, optimal shot choice and simulation for the game Horse."""
from .model import (
    DomainError,
    Equal,
    Free,
    LinearDiff,
    Matchup,
    Ratio,
    RuleSet,
    ScenarioDistribution,
    ShotProbability,
    resolve,
    scenario_probs,
    score_prob,
    score_prob_equal,
)
from .optimize import (
    Optimum,
    OptimumKind,
    d_score_dp1,
    numeric_optimal_p1,
    optimal_p1,
    pr_pushes_harder,
)
from .simulate import (
    TurnResult,
    simulate_turn,
    simulate_turns,
    turn_point_distribution,
    turn_score_estimate,
)
from .game import GameConfig, GameState, game_win_prob_exact, game_win_prob_mc, play_game

__version__ = "0.1.0"

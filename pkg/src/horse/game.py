"""Full games of H-O-R-S-E.

A player who collects ``letters_to_lose`` letters loses. The shooter keeps
shooting after scoring a point (S2) under both rule sets; the turn passes to
the opponent on a miss (S1), and also on S3 under Pops rules.

`game_win_prob_exact` solves the absorbing Markov chain over letter counts
and shooter. `game_win_prob_mc` plays the games shot by shot.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .model import DomainError, RuleSet, as_prob
from .simulate import make_rng, turn_point_distribution

ONE, TWO = 0, 1


@dataclass(frozen=True)
class GameConfig:
    """Probabilities for a game.

    ``one_shoots`` is ``(shooter, follower)`` make probabilities when
    Player One has the turn; ``two_shoots`` is the same pair, Player Two's
    first, when Player Two has the turn.
    """
    rules: RuleSet
    one_shoots: tuple[float, float]
    two_shoots: tuple[float, float]
    letters_to_lose: int = 5
    first_shooter: int = ONE

    def __post_init__(self):
        object.__setattr__(self, "rules", RuleSet.parse(self.rules))
        object.__setattr__(self, "one_shoots", tuple(as_prob(p) for p in self.one_shoots))
        object.__setattr__(self, "two_shoots", tuple(as_prob(p) for p in self.two_shoots))
        if len(self.one_shoots) != 2 or len(self.two_shoots) != 2:
            raise DomainError("shooter-role probabilities come in (shooter, follower) pairs")
        if int(self.letters_to_lose) != self.letters_to_lose or self.letters_to_lose < 1:
            raise DomainError(f"letters_to_lose must be a positive integer, got {self.letters_to_lose!r}")
        object.__setattr__(self, "letters_to_lose", int(self.letters_to_lose))
        if self.first_shooter not in (ONE, TWO):
            raise DomainError(f"first_shooter must be 0 or 1, got {self.first_shooter!r}")

    @classmethod
    def from_skills(cls, rules, p1, p2, **kwargs) -> GameConfig:
        """Players with fixed make probabilities regardless of who shoots."""
        return cls(rules, (p1, p2), (p2, p1), **kwargs)

    def shooting(self, player):
        return self.one_shoots if player == ONE else self.two_shoots

    def swapped(self) -> GameConfig:
        """The same game with the players' labels exchanged."""
        return replace(self, one_shoots=self.two_shoots, two_shoots=self.one_shoots,
                       first_shooter=1 - self.first_shooter)


@dataclass(frozen=True)
class GameState:
    letters: tuple[int, int]
    shooter: int

    def is_terminal(self, letters_to_lose) -> bool:
        return max(self.letters) >= letters_to_lose

    def winner(self, letters_to_lose):
        if self.letters[TWO] >= letters_to_lose:
            return ONE
        if self.letters[ONE] >= letters_to_lose:
            return TWO
        return None


def _state_index(l1, l2, shooter, L):
    return (l1 * L + l2) * 2 + shooter


def game_win_prob_exact(cfg: GameConfig) -> float:
    """Probability Player One wins, by a linear solve over transient states."""
    L = cfg.letters_to_lose
    size = 2 * L * L
    M = np.eye(size)
    rhs = np.zeros(size)
    for l1 in range(L):
        for l2 in range(L):
            for shooter in (ONE, TWO):
                i = _state_index(l1, l2, shooter, L)
                a, b = cfg.shooting(shooter)
                # letters the opponent can still absorb before losing
                room = L - (l2 if shooter == ONE else l1)
                dist = turn_point_distribution(cfg.rules, a, b, room)
                for k, pk in enumerate(dist[:-1]):
                    n1, n2 = (l1, l2 + k) if shooter == ONE else (l1 + k, l2)
                    M[i, _state_index(n1, n2, 1 - shooter, L)] -= pk
                if shooter == ONE:
                    rhs[i] += dist[-1]
    w = np.linalg.solve(M, rhs)
    return float(w[_state_index(0, 0, cfg.first_shooter, L)])


def play_game(cfg: GameConfig, rng) -> int:
    """Play one game shot by shot and return the winner (0 or 1)."""
    rng = make_rng(rng)
    L = cfg.letters_to_lose
    letters = [0, 0]
    shooter = cfg.first_shooter
    while True:
        a, b = cfg.shooting(shooter)
        if rng.random() >= a:
            shooter = 1 - shooter
        elif rng.random() >= b:
            letters[1 - shooter] += 1
            if letters[1 - shooter] >= L:
                return shooter
        elif not cfg.rules.restarts_after_s3:
            shooter = 1 - shooter


def game_win_prob_mc(cfg: GameConfig, n: int, seed):
    """Monte Carlo win probability for Player One over ``n`` games.

    Games are advanced in lockstep, one shooting round per step. Returns
    ``(estimate, std_error)``; the same ``(cfg, n, seed)`` always gives the
    same result.
    """
    if n < 1:
        raise DomainError("n must be at least 1")
    rng = make_rng(seed)
    L = cfg.letters_to_lose
    make = np.array([cfg.one_shoots[0], cfg.two_shoots[0]])
    follow = np.array([cfg.one_shoots[1], cfg.two_shoots[1]])
    letters = np.zeros((n, 2), dtype=np.int64)
    shooter = np.full(n, cfg.first_shooter, dtype=np.int64)
    winner = np.full(n, -1, dtype=np.int64)
    active = np.arange(n)
    restart = cfg.rules.restarts_after_s3
    while active.size:
        s = shooter[active]
        draws = rng.random((2, active.size))
        made = draws[0] < make[s]
        followed = draws[1] < follow[s]
        point = made & ~followed
        passes = ~made if restart else ~point

        scorers = active[point]
        victims = 1 - shooter[scorers]
        letters[scorers, victims] += 1
        done = letters[scorers, victims] >= L
        winner[scorers[done]] = shooter[scorers[done]]

        shooter[active[passes]] ^= 1
        active = active[winner[active] < 0]
    est = float(np.mean(winner == ONE))
    return est, math.sqrt(est * (1.0 - est) / n)

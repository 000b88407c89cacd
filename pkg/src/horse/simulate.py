"""Monte Carlo play of single Horse turns.

These simulators draw individual make/miss events and never consult the
closed-form scoring probabilities, so they serve as an independent check
on `horse.model`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import DomainError, RuleSet, as_prob, score_prob

#: Bit generator used for every simulation; reported in CLI metadata.
RNG_ALGORITHM = "numpy.random.PCG64"


def make_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.PCG64(seed))


@dataclass(frozen=True)
class TurnResult:
    scored: bool
    shots_taken: int  # shots attempted by the shooter

    def __post_init__(self):
        if self.shots_taken < 1:
            raise ValueError("a turn has at least one shot")


def simulate_turn(rules, p1, p2, rng) -> TurnResult:
    """Play one turn up to its first point or until it passes.

    S1 ends the turn unscored, S2 ends it scored (only the first point
    matters here), and S3 restarts under Traditional rules or ends the turn
    under Pops rules.
    """
    rules = RuleSet.parse(rules)
    p1, p2 = float(as_prob(p1)), float(as_prob(p2))
    rng = make_rng(rng)
    shots = 0
    while True:
        shots += 1
        if rng.random() >= p1:
            return TurnResult(False, shots)
        if rng.random() >= p2:
            return TurnResult(True, shots)
        if not rules.restarts_after_s3:
            return TurnResult(False, shots)


def simulate_turns(rules, p1, p2, n, rng):
    """Vectorised `simulate_turn` over ``n`` independent turns.

    Returns ``(scored, shots_taken)`` arrays of length ``n``.
    """
    rules = RuleSet.parse(rules)
    p1, p2 = float(as_prob(p1)), float(as_prob(p2))
    if n < 1:
        raise DomainError("n must be at least 1")
    rng = make_rng(rng)
    scored = np.zeros(n, dtype=bool)
    shots = np.zeros(n, dtype=np.int64)
    active = np.arange(n)
    while active.size:
        shots[active] += 1
        draws = rng.random((2, active.size))
        made = draws[0] < p1
        followed = draws[1] < p2
        scored[active[made & ~followed]] = True
        if rules.restarts_after_s3:
            active = active[made & followed]
        else:
            break
    return scored, shots


def turn_score_estimate(rules, p1, p2, n, seed):
    """Monte Carlo estimate of the scoring probability.

    Returns ``(estimate, std_error)`` with the binomial standard error
    ``sqrt(phat (1 - phat) / n)``.
    """
    scored, _ = simulate_turns(rules, p1, p2, n, make_rng(seed))
    est = float(scored.mean())
    return est, math.sqrt(est * (1.0 - est) / n)


def turn_point_distribution(rules, p1, p2, max_points):
    """Distribution of points the shooter scores over one whole turn.

    S2 gives a point and the shooter goes again under both rule sets; the
    turn ends at S1, and also at S3 under Pops rules. Every restart is a
    fresh start, so the chance of one more point is always the single-turn
    scoring probability ``c`` and the count is geometric:
    ``P(k) = c**k (1 - c)`` for ``k < max_points``, with the tail
    ``P(>= max_points) = c**max_points`` as the last entry.
    """
    if int(max_points) != max_points or max_points < 1:
        raise DomainError(f"max_points must be a positive integer, got {max_points!r}")
    max_points = int(max_points)
    c = score_prob(rules, p1, p2)
    k = np.arange(max_points)
    probs = c ** k * (1.0 - c)
    return [float(x) for x in probs] + [c ** max_points]

"""Single-turn scoring probabilities for Horse.

A turn is built from three scenarios: the shooter misses (S1), the shooter
makes and the follower misses (S2, a point), or both make (S3). Traditional
rules restart the turn after S3; Pops rules pass the turn to the opponent.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass


class DomainError(ValueError):
    """Raised when a probability or matchup parameter is outside its domain."""


class ShotProbability(float):
    """A make probability in the open interval (0, 1)."""

    def __new__(cls, value):
        value = float(value)
        if not 0.0 < value < 1.0:
            raise DomainError(f"shot probability must lie in (0, 1), got {value!r}")
        return super().__new__(cls, value)

    def __repr__(self):
        return f"ShotProbability({float(self)!r})"


def as_prob(x) -> ShotProbability:
    if isinstance(x, ShotProbability):
        return x
    return ShotProbability(x)


class RuleSet(enum.Enum):
    TRADITIONAL = "tr"
    POPS = "pr"

    @classmethod
    def parse(cls, name) -> RuleSet:
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower()
        aliases = {"tr": cls.TRADITIONAL, "traditional": cls.TRADITIONAL,
                   "pr": cls.POPS, "pops": cls.POPS}
        try:
            return aliases[key]
        except KeyError:
            raise DomainError(f"unknown rule set {name!r}; expected 'tr' or 'pr'") from None

    @property
    def restarts_after_s3(self) -> bool:
        return self is RuleSet.TRADITIONAL


# -- matchups ---------------------------------------------------------------

@dataclass(frozen=True)
class Equal:
    """Both players make the chosen shot with the same probability."""
    p: float | None = None

    def __post_init__(self):
        if self.p is not None:
            object.__setattr__(self, "p", as_prob(self.p))

    @property
    def p1(self):
        return self.p

    @property
    def p1_lower(self) -> float:
        return 0.0

    @property
    def p1_upper(self) -> float:
        return 1.0

    def with_p1(self, p1) -> Equal:
        return Equal(p1)


@dataclass(frozen=True)
class Free:
    p1: float
    p2: float

    def __post_init__(self):
        object.__setattr__(self, "p1", as_prob(self.p1))
        object.__setattr__(self, "p2", as_prob(self.p2))


@dataclass(frozen=True)
class LinearDiff:
    """Opponent makes the shot with probability ``p1 - d``."""
    d: float
    p1: float | None = None

    def __post_init__(self):
        d = float(self.d)
        if not -1.0 < d < 1.0:
            raise DomainError(f"difference d must lie in (-1, 1), got {d!r}")
        object.__setattr__(self, "d", d)
        if self.p1 is not None:
            p1 = as_prob(self.p1)
            if not self.p1_lower < p1 < self.p1_upper:
                raise DomainError(f"p1 must lie in ({self.p1_lower!r}, {self.p1_upper!r}) "
                                  f"when d={d!r}, got {float(p1)!r}")
            object.__setattr__(self, "p1", p1)

    @property
    def p1_lower(self) -> float:
        # p2 = p1 - d must stay positive
        return max(0.0, self.d)

    @property
    def p1_upper(self) -> float:
        return min(1.0, 1.0 + self.d)

    def with_p1(self, p1) -> LinearDiff:
        return LinearDiff(self.d, p1)


@dataclass(frozen=True)
class Ratio:
    """Opponent makes the shot with probability ``p1 / r``."""
    r: float
    p1: float | None = None

    def __post_init__(self):
        r = float(self.r)
        if not r > 0.0:
            raise DomainError(f"ratio r must be positive, got {r!r}")
        object.__setattr__(self, "r", r)
        if self.p1 is not None:
            p1 = as_prob(self.p1)
            if not p1 < self.p1_upper:
                raise DomainError(
                    f"p1 must lie in (0, {self.p1_upper!r}) when r={r!r}, got {float(p1)!r}")
            object.__setattr__(self, "p1", p1)

    @property
    def p1_lower(self) -> float:
        return 0.0

    @property
    def p1_upper(self) -> float:
        return min(1.0, self.r)

    def with_p1(self, p1) -> Ratio:
        return Ratio(self.r, p1)


Matchup = Equal | Free | LinearDiff | Ratio


def resolve(matchup: Matchup) -> tuple[ShotProbability, ShotProbability]:
    """Return the concrete ``(p1, p2)`` pair a matchup describes."""
    if isinstance(matchup, Free):
        return matchup.p1, matchup.p2
    if matchup.p1 is None:
        raise DomainError(f"{type(matchup).__name__} matchup has no p1 set")
    p1 = matchup.p1
    if isinstance(matchup, Equal):
        p2 = p1
    elif isinstance(matchup, LinearDiff):
        p2 = p1 - matchup.d
    elif isinstance(matchup, Ratio):
        p2 = p1 / matchup.r
    else:
        raise TypeError(f"not a matchup: {matchup!r}")
    return as_prob(p1), as_prob(p2)


# -- scenario and scoring probabilities --------------------------------------

@dataclass(frozen=True)
class ScenarioDistribution:
    s1: float  # shooter misses
    s2: float  # shooter makes, follower misses
    s3: float  # both make

    def __post_init__(self):
        for name in ("s1", "s2", "s3"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise DomainError(f"{name}={v!r} is not a probability")
        if abs(self.s1 + self.s2 + self.s3 - 1.0) > 1e-12:
            raise DomainError("scenario probabilities do not sum to 1")

    def __iter__(self):
        return iter((self.s1, self.s2, self.s3))


def scenario_probs(p1, p2) -> ScenarioDistribution:
    p1, p2 = as_prob(p1), as_prob(p2)
    return ScenarioDistribution(1.0 - p1, p1 * (1.0 - p2), p1 * p2)


def score_prob(rules: RuleSet, p1, p2) -> float:
    """Probability the shooter scores a point before the turn passes.

    Under Pops rules that is just P(S2). Under Traditional rules the turn
    restarts on S3, so the probability solves ``A = P(S2) + P(S3) * A``.
    """
    rules = RuleSet.parse(rules)
    p1, p2 = float(as_prob(p1)), float(as_prob(p2))
    if rules is RuleSet.POPS:
        return p1 * (1.0 - p2)
    # 1 - p1*p2 written as (1 - p1) + p1*(1 - p2): no cancellation near (1, 1)
    return p1 * (1.0 - p2) / ((1.0 - p1) + p1 * (1.0 - p2))


def score_prob_equal(rules: RuleSet, p) -> float:
    return score_prob(rules, p, p)

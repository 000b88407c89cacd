"""Optimal shot difficulty for the shooter.

For each matchup family (equal players, a fixed difference ``p2 = p1 - d``,
or a fixed ratio ``p2 = p1 / r``) the shooter picks ``p1`` to maximise the
chance of scoring on the turn. Some cases have an interior maximiser; others
increase all the way to the open end of the domain, in which case the
result is a supremum that is never attained.

`optimal_p1` gives the closed-form answers. `numeric_optimal_p1` is a grid
scan plus golden-section search that only calls `score_prob`, used to
cross-check the closed forms.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .model import (
    DomainError,
    Equal,
    LinearDiff,
    Ratio,
    RuleSet,
    as_prob,
    resolve,
    score_prob,
)


class OptimumKind(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY_SUPREMUM = "boundary_supremum"


@dataclass(frozen=True)
class Optimum:
    """Result of maximising the scoring probability over ``p1``.

    For a boundary supremum, ``argmax`` is the open upper endpoint of the
    ``p1`` domain and ``value`` is the limit of the scoring probability
    there; neither is attained.
    """
    kind: OptimumKind
    argmax: float
    value: float

    @property
    def attained(self) -> bool:
        return self.kind is OptimumKind.INTERIOR

    @property
    def is_supremum(self) -> bool:
        return self.kind is OptimumKind.BOUNDARY_SUPREMUM


def _check_family(case):
    if not isinstance(case, (Equal, LinearDiff, Ratio)):
        raise DomainError(f"expected an Equal, LinearDiff or Ratio case, got {case!r}")


def _boundary_limit(rules: RuleSet, case) -> float:
    # Limit of the scoring probability as p1 rises to the open upper endpoint.
    u = case.p1_upper
    if isinstance(case, Equal):
        num, den, slope = u * (1.0 - u), 1.0 - u * u, 1.0
    elif isinstance(case, LinearDiff):
        # 1 - p2 = 1 - u + d, kept unexpanded so d > 0 survives at u = 1
        num, den, slope = u * (1.0 - u + case.d), 1.0 - u * u + u * case.d, 1.0
    else:
        num, den, slope = u * (1.0 - u / case.r), 1.0 - u * u / case.r, 1.0 / case.r
    if rules is RuleSet.POPS:
        return num
    if den != 0.0:
        return num / den
    # 0/0 at p1 = p2 = 1; l'Hopital along p2 = p2(p1) gives slope / (1 + slope)
    return slope / (1.0 + slope)


def _interior(rules, case, p1) -> Optimum:
    return Optimum(OptimumKind.INTERIOR, p1, score_prob(rules, *resolve(case.with_p1(p1))))


def _supremum(rules, case) -> Optimum:
    return Optimum(OptimumKind.BOUNDARY_SUPREMUM, case.p1_upper, _boundary_limit(rules, case))


def optimal_p1(rules, case) -> Optimum:
    """Closed-form optimal ``p1`` for a matchup family with ``p1`` left free.

    ================  =========================  ==================
    case              traditional                pops
    ================  =========================  ==================
    equal             sup -> 1                   1/2
    diff, d >= 0      sup -> 1                   (1 + d) / 2
    diff, d < 0       1 - sqrt(-d)               (1 + d) / 2
    ratio, r >= 2     sup -> 1                   sup -> 1
    ratio, 1 <= r < 2 sup -> 1                   r / 2
    ratio, r < 1      1 - sqrt(1 - r)            r / 2
    ================  =========================  ==================
    """
    rules = RuleSet.parse(rules)
    _check_family(case)
    trad = rules is RuleSet.TRADITIONAL
    if isinstance(case, Equal):
        return _supremum(rules, case) if trad else _interior(rules, case, 0.5)
    if isinstance(case, LinearDiff):
        d = case.d
        if not trad:
            return _interior(rules, case, (1.0 + d) / 2.0)
        if d >= 0.0:
            return _supremum(rules, case)
        return _interior(rules, case, 1.0 - math.sqrt(-d))
    r = case.r
    if trad:
        if r >= 1.0:
            return _supremum(rules, case)
        return _interior(rules, case, 1.0 - math.sqrt(1.0 - r))
    if r >= 2.0:
        return _supremum(rules, case)
    return _interior(rules, case, r / 2.0)


def optimum_formula(rules, case) -> str:
    """Symbolic form of the optimal ``p1`` chosen by `optimal_p1`."""
    rules = RuleSet.parse(rules)
    opt = optimal_p1(rules, case)
    if opt.is_supremum:
        return f"sup->{opt.argmax:g}"
    if isinstance(case, Equal):
        return "1/2"
    if isinstance(case, LinearDiff):
        return "1 - sqrt(-d)" if rules is RuleSet.TRADITIONAL else "(1 + d)/2"
    return "1 - sqrt(1 - r)" if rules is RuleSet.TRADITIONAL else "r/2"


def d_score_dp1(rules, case, p1) -> float:
    """Derivative of the scoring probability along the family, in ``p1``."""
    rules = RuleSet.parse(rules)
    _check_family(case)
    p = float(as_prob(p1))
    if not case.p1_lower < p < case.p1_upper:
        raise DomainError(f"p1={p!r} outside ({case.p1_lower!r}, {case.p1_upper!r})")
    trad = rules is RuleSet.TRADITIONAL
    if isinstance(case, Equal):
        return 1.0 / (1.0 + p) ** 2 if trad else 1.0 - 2.0 * p
    if isinstance(case, LinearDiff):
        d = case.d
        if trad:
            return ((1.0 - p) ** 2 + d) / (1.0 + d * p - p * p) ** 2
        return (1.0 + d) - 2.0 * p
    r = case.r
    if trad:
        return r * (p * p - 2.0 * p + r) / (p * p - r) ** 2
    return 1.0 - 2.0 * p / r


# -- numeric oracle ----------------------------------------------------------

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section_max(f, a, b, tol=1e-9):
    """Maximiser of a unimodal ``f`` on ``[a, b]``, to within ``tol``."""
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def numeric_optimal_p1(rules, case, resolution=1e-3, tolerance=1e-9) -> Optimum:
    """Maximise the scoring probability numerically over the ``p1`` domain.

    Scans a grid of spacing ``resolution`` (narrowed so that short domains
    still get at least 64 cells), refines the best cell by golden-section search, then
    reports a boundary supremum if the refined point is within one grid step
    of the upper endpoint and the objective is still increasing there.
    """
    rules = RuleSet.parse(rules)
    _check_family(case)
    if not (resolution > 0 and tolerance > 0):
        raise DomainError("resolution and tolerance must be positive")
    lower, upper = case.p1_lower, case.p1_upper

    def f(p):
        try:
            return score_prob(rules, *resolve(case.with_p1(p)))
        except DomainError:
            # rounding can push p2 onto 0 or 1 right at the domain edge
            return -math.inf

    step = min(resolution, (upper - lower) / 64.0)
    grid = lower + np.arange(1, int(math.ceil((upper - lower) / step))) * step
    grid = grid[grid < upper]
    values = np.array([f(p) for p in grid])
    best = int(np.argmax(values))  # first maximum on ties
    lo = grid[best - 1] if best > 0 else lower
    hi = grid[best + 1] if best + 1 < len(grid) else upper
    x = float(golden_section_max(f, float(lo), float(hi), tolerance))

    gap = upper - x
    if gap < step:
        probe = x + 0.5 * gap
        if probe < upper and f(probe) > f(x):
            delta = 1e-7 * upper
            limit = 2.0 * f(upper - delta) - f(upper - 2.0 * delta)
            return Optimum(OptimumKind.BOUNDARY_SUPREMUM, upper, limit)
    return Optimum(OptimumKind.INTERIOR, x, f(x))


def pr_pushes_harder(case) -> tuple[Optimum, Optimum, bool]:
    """Compare the optimal ``p1`` under both rule sets.

    The flag is true when the Pops optimum (argmax or limit point) is
    strictly below the Traditional one.
    """
    tr = optimal_p1(RuleSet.TRADITIONAL, case)
    pr = optimal_p1(RuleSet.POPS, case)
    return tr, pr, pr.argmax < tr.argmax

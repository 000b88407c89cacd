"""Which shot difficulty should the shooter pick?

Computes the optimal p1 for every matchup family under both rule sets,
compares with a brute numeric maximiser, and checks that Pops rules always
favour harder shots.
"""
import math

import numpy as np

from horse import (
    Equal,
    LinearDiff,
    Ratio,
    RuleSet,
    numeric_optimal_p1,
    optimal_p1,
    pr_pushes_harder,
)
from horse.optimize import optimum_formula

TR, PR = RuleSet.TRADITIONAL, RuleSet.POPS


def show(opt):
    if opt.is_supremum:
        return f"sup -> {opt.argmax:g} (limit value {opt.value:.4f}, not attained)"
    return f"{opt.argmax:.6f} (value {opt.value:.4f})"


# %% The six regimes
cases = [Equal(), LinearDiff(0.2), LinearDiff(-0.2), Ratio(2.5), Ratio(1.1), Ratio(0.8)]
for case in cases:
    print(case)
    for rules in (TR, PR):
        print(f"   {rules.name:<11} {optimum_formula(rules, case):<16} {show(optimal_p1(rules, case))}")

# %% Worked numbers
print("\n1 - sqrt(0.2) =", 1 - math.sqrt(0.2))

# %% Cross-check against a grid scan + golden-section search
rng = np.random.default_rng(0)
mismatches = 0
for d in rng.uniform(-1, 1, 100):
    for rules in (TR, PR):
        closed, numeric = optimal_p1(rules, LinearDiff(d)), numeric_optimal_p1(rules, LinearDiff(d))
        mismatches += closed.kind is not numeric.kind or (
            not closed.is_supremum and abs(closed.argmax - numeric.argmax) > 1e-6)
print(f"\nnumeric vs closed form, 200 random linear-difference cases: {mismatches} mismatches")

# %% Pops rules favour harder shots
for case in (LinearDiff(-0.5), LinearDiff(0.5), Ratio(0.5), Ratio(1.5), Ratio(3.0)):
    tr, pr, harder = pr_pushes_harder(case)
    print(f"{case}: TR {tr.argmax:.3f}, PR {pr.argmax:.3f}, Pops strictly harder: {harder}")
